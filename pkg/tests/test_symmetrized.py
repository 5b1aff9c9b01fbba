"""Symmetrized bivariate polynomials: definition, closed form, duality, GF."""

import random
from fractions import Fraction
from math import factorial

import pytest

from polybernoulli import (
    Params,
    Poly1,
    duality_check,
    pb_number,
    pb_poly,
    sym_closed,
    sym_def,
    sym_gf_oracle,
)

from conftest import rand_params

CLASSICAL = Params(Fraction(1), Fraction(0))


def test_sym_def_rejects_negative_indices():
    with pytest.raises(ValueError):
        sym_def(-1, 0, CLASSICAL)
    with pytest.raises(ValueError):
        sym_closed(0, -2, CLASSICAL)


def test_closed_form_equals_definition():
    rng = random.Random(501)
    for _ in range(3):
        params = rand_params(rng)
        for n in range(6):
            for m in range(6):
                assert sym_closed(n, m, params) == sym_def(n, m, params), (n, m, params)


def test_duality_exact():
    rng = random.Random(502)
    for _ in range(4):
        params = rand_params(rng)
        for n in range(6):
            for m in range(6):
                assert sym_def(n, m, params) == sym_def(m, n, params).swap_vars()
                assert duality_check(n, m, params)


def test_one_sided_shift_breaks_duality():
    # Renormalizing only the y slot, with x left alone, cannot be symmetric:
    # exhibit it at L = 2 where the two readings genuinely differ.
    params = Params(Fraction(3, 2), Fraction(1, 2))
    L = params.log_sum

    def lopsided(n, m):
        # same defining sum but with the raw x polynomial of the classical
        # normalization, i.e. skip the 1/L^n pull-back
        return L**n * sym_def(n, m, params)

    assert lopsided(2, 1) != lopsided(1, 2).swap_vars()


def test_classical_slice_gives_negative_index_numbers():
    # at alpha=1, beta=0 and x=y=0 the polynomial collapses to B_n^(-m)
    for n in range(6):
        for m in range(6):
            assert sym_def(n, m, CLASSICAL)(0, 0) == pb_number(n, -m)


def test_m_zero_reduces_to_one_variable_polynomial():
    rng = random.Random(503)
    for _ in range(4):
        params = rand_params(rng)
        L = params.log_sum
        for n in range(6):
            got = sym_def(n, 0, params)
            # the 1/L^n prefactor cancels the L^n of the classical-rescaling
            # route, leaving the classical k=0 polynomial at (x-beta)/L; no y
            # dependence at all
            want = pb_poly(n, 0).compose(Poly1((-params.beta / L, 1 / L)))
            assert all(j == 0 for (_, j, _c) in got.sorted_terms())
            for x in (Fraction(0), Fraction(1, 2), Fraction(-3)):
                assert got(x, Fraction(7)) == want(x)


def test_generating_function_oracle():
    rng = random.Random(504)
    for _ in range(2):
        params = rand_params(rng)
        grid = sym_gf_oracle(params, 4, 4)
        for n in range(5):
            for m in range(5 - n):
                got = grid.coefficient(n, m) * (factorial(n) * factorial(m))
                assert got == sym_def(n, m, params), (n, m, params)
