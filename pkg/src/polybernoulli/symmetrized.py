"""Symmetrized two-variable poly-Bernoulli polynomials C_n^(-m)(x, y; a, b).

Writing L = alpha + beta, the definition pulls the generalized one-variable
polynomials back to the classical normalization:

    C_n^(-m)(x, y; a, b)
        = L^(-n) sum_{k=0}^{m} C(m,k) B_n^(-k)(x; a, b) ((y - beta)/L)^(m-k),

i.e. the classical symmetrized polynomial evaluated at ((x-beta)/L,
(y-beta)/L).  With both slots renormalized the same way, the bivariate
generating function e^(Xt) e^(Yu) / (e^t + e^u - e^(t+u)) with X = (x+alpha)/L
and Y = (y+alpha)/L is symmetric under (t,X) <-> (u,Y), which is what makes
the duality C_n^(-m)(x,y) = C_m^(-n)(y,x) hold for every parameter choice.  A
shift of y alone (keeping x un-normalized) satisfies no such symmetry; the
tests keep a counterexample.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact_arith import binomial, stirling2
from .generalized import Params, gpb_explicit
from .polynomials import Poly1, Poly2
from .polyseries import Series1, Series2, ps2_lonesum_kernel, ps_exp

__all__ = ["sym_def", "sym_closed", "sym_gf_oracle", "duality_check"]


@lru_cache(maxsize=None)
def sym_def(n: int, m: int, params: Params) -> Poly2:
    """Defining sum; exact bivariate polynomial in (x, y)."""
    if n < 0 or m < 0:
        raise ValueError("sym_def expects n, m >= 0")
    L = params.log_sum
    y_shift = Poly1((-params.beta / L, Fraction(1) / L))  # (y - beta)/L
    acc = Poly2()
    for k in range(m + 1):
        bx = Poly2.from_x(gpb_explicit(n, -k, params).poly)
        yy = Poly2.from_y(y_shift ** (m - k))
        acc = acc + binomial(m, k) * bx * yy
    return Fraction(1) / L**n * acc


@lru_cache(maxsize=None)
def sym_closed(n: int, m: int, params: Params) -> Poly2:
    """Closed double-Stirling form.

    sum_j (j!)^2 [sum_p C(n,p) S(p,j) X^(n-p)] [sum_l C(m,l) S(l,j) Y^(m-l)]
    with X = (x+alpha)/L, Y = (y+alpha)/L; the second factor runs over the y
    anchor (the x-anchored reading collapses to a one-variable polynomial and
    fails the definition for every m >= 1).
    """
    if n < 0 or m < 0:
        raise ValueError("sym_closed expects n, m >= 0")
    L = params.log_sum
    x_anchor = Poly1((params.alpha / L, Fraction(1) / L))
    y_anchor = x_anchor
    acc = Poly2()
    fact = 1
    for j in range(min(n, m) + 1):
        if j:
            fact *= j
        fx = Poly1()
        for p in range(n + 1):
            fx = fx + (binomial(n, p) * stirling2(p, j)) * x_anchor ** (n - p)
        fy = Poly1()
        for l in range(m + 1):
            fy = fy + (binomial(m, l) * stirling2(l, j)) * y_anchor ** (m - l)
        acc = acc + (fact * fact) * Poly2.from_x(fx) * Poly2.from_y(fy)
    return acc


def sym_gf_oracle(params: Params, order_t: int, order_u: int) -> Series2:
    """e^(Xt) e^(Yu) / (e^t + e^u - e^(t+u)) with Poly2 coefficients.

    X = (x+alpha)/L, Y = (y+alpha)/L.  Coefficient (n, m) times n! m! must
    equal sym_def(n, m, params).
    """
    L = params.log_sum
    x_anchor = Poly2.from_x(Poly1((params.alpha / L, Fraction(1) / L)))
    y_anchor = Poly2.from_y(Poly1((params.alpha / L, Fraction(1) / L)))

    def exp_row(anchor: Poly2, order: int) -> list[Poly2]:
        row = [Poly2.constant(1)]
        for i in range(1, order + 1):
            row.append(row[-1] * anchor * Fraction(1, i))
        return row

    ex = exp_row(x_anchor, order_t)
    ey = exp_row(y_anchor, order_u)
    exponentials = Series2([[ex[i] * ey[j] for j in range(order_u + 1)] for i in range(order_t + 1)])
    kernel = ps2_lonesum_kernel(order_t, order_u)
    lifted = Series2(
        [
            [Poly2.constant(kernel.coefficient(i, j)) for j in range(order_u + 1)]
            for i in range(order_t + 1)
        ]
    )
    return exponentials * lifted


def duality_check(n: int, m: int, params: Params) -> bool:
    """C_n^(-m)(x, y) == C_m^(-n)(y, x), exactly."""
    return sym_def(n, m, params) == sym_def(m, n, params).swap_vars()
