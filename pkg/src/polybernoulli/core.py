"""Classical poly-Bernoulli numbers and polynomials (exact rationals).

B_n^(k)(x) = sum_{m=0}^{n} (m+1)^(-k) sum_{j=0}^{m} (-1)^j C(m,j) (x-j)^n for
any integer k, with B_n^(k) = B_n^(k)(0).  Negative upper index has the closed
Stirling form sum_j (j!)^2 S(n+1,j+1) S(k+1,j+1), which counts lonesum
(0,1)-matrices; lonesum_count() enumerates those matrices two independent ways
and is the combinatorial oracle for that family.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .exact_arith import binomial, inv_int_pow, stirling2
from .polynomials import Poly1

__all__ = [
    "pb_poly",
    "pb_number",
    "pb_number_neg_closed",
    "pb_number_recurrence",
    "bernoulli_poly",
    "bernoulli_numbers",
    "lonesum_count",
]


@lru_cache(maxsize=None)
def _shift_power(j: int, n: int, sign: int) -> Poly1:
    # (x + sign*j)^n
    return Poly1((sign * j, 1)) ** n


@lru_cache(maxsize=None)
def pb_poly(n: int, k: int) -> Poly1:
    """B_n^(k)(x), exact, any integer k, n >= 0."""
    if n < 0:
        raise ValueError("pb_poly: n must be >= 0")
    # Swap the summation order: weight of (x-j)^n is
    # (-1)^j sum_{m=j}^{n} (m+1)^(-k) C(m,j).
    acc = Poly1()
    for j in range(n + 1):
        w = sum(
            (inv_int_pow(m + 1, k) * binomial(m, j) for m in range(j, n + 1)),
            Fraction(0),
        )
        acc = acc + ((-1) ** j * w) * _shift_power(j, n, -1)
    return acc


def pb_number(n: int, k: int) -> Fraction:
    """B_n^(k) = B_n^(k)(0)."""
    return pb_poly(n, k).coefficient(0)


def pb_number_neg_closed(n: int, k: int) -> int:
    """B_n^(-k) for n, k >= 0: sum_j (j!)^2 S(n+1,j+1) S(k+1,j+1)."""
    if n < 0 or k < 0:
        raise ValueError("pb_number_neg_closed expects n, k >= 0")
    acc = 0
    fact = 1  # j!
    for j in range(min(n, k) + 1):
        if j:
            fact *= j
        acc += fact * fact * stirling2(n + 1, j + 1) * stirling2(k + 1, j + 1)
    return acc


@lru_cache(maxsize=None)
def pb_number_recurrence(n: int, k: int) -> Fraction:
    """Row-n recurrence check value.

    (n+1) B_n^(k) = B_n^(k-1) - sum_{m=1}^{n-1} C(n, m-1) B_m^(k); the upper
    index k has no base case of its own, so the k-1 input comes from the
    explicit formula while the row recursion grounds at n = 0.
    """
    if n == 0:
        return pb_number(0, k)
    acc = pb_number(n, k - 1)
    for m in range(1, n):
        acc -= binomial(n, m - 1) * pb_number_recurrence(m, k)
    return acc / (n + 1)


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> Poly1:
    """Bernoulli polynomial via sum_m 1/(m+1) sum_j (-1)^j C(m,j) (x+j)^n.

    Convention B_1(0) = -1/2.
    """
    if n < 0:
        raise ValueError("bernoulli_poly: n must be >= 0")
    acc = Poly1()
    for j in range(n + 1):
        w = sum(
            (Fraction(binomial(m, j), m + 1) for m in range(j, n + 1)),
            Fraction(0),
        )
        acc = acc + ((-1) ** j * w) * _shift_power(j, n, +1)
    return acc


@lru_cache(maxsize=None)
def _bernoulli_upto(n: int) -> tuple[Fraction, ...]:
    # C(m+1, j) recurrence; independent of bernoulli_poly and cheap enough
    # for the Euler-Maclaurin tails that need a few hundred of them.
    vals = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += binomial(m + 1, j) * vals[j]
        vals.append(-acc / (m + 1))
    return tuple(vals)


def bernoulli_numbers(n: int) -> list[Fraction]:
    """B_0 .. B_n (B_1 = -1/2), via the classical binomial-sum recurrence."""
    return list(_bernoulli_upto(n))


def _is_staircase_orderable(rows: tuple[int, ...], width: int) -> bool:
    # No pair of rows may be set-incomparable: a 2x2 identity or anti-identity
    # submatrix exists exactly when some row pair has a 1-column each way.
    for i, ri in enumerate(rows):
        for rj in rows[i + 1 :]:
            if (ri & ~rj) and (rj & ~ri):
                return False
    return True


def lonesum_count(n: int, k: int) -> int:
    """Number of n x k (0,1)-matrices uniquely determined by row/column sums.

    Two independent characterizations are enumerated and must agree: matrices
    whose (row-sum vector, column-sum vector) class is a singleton, and
    matrices avoiding both 2x2 permutation submatrices.  Guarded to
    n*k <= 20.
    """
    if n < 0 or k < 0:
        raise ValueError("lonesum_count expects n, k >= 0")
    if n * k > 20:
        raise ValueError("lonesum_count enumeration guarded to n*k <= 20")
    signatures: dict[tuple, int] = {}
    staircase = 0
    for rows in itertools.product(range(1 << k), repeat=n):
        rowsums = tuple(r.bit_count() for r in rows)
        colsums = tuple(
            sum((r >> c) & 1 for r in rows) for c in range(k)
        )
        sig = (rowsums, colsums)
        signatures[sig] = signatures.get(sig, 0) + 1
        if _is_staircase_orderable(rows, k):
            staircase += 1
    singletons = sum(1 for c in signatures.values() if c == 1)
    if singletons != staircase:
        raise AssertionError(
            "lonesum characterizations disagree at (%d, %d): %d vs %d"
            % (n, k, singletons, staircase)
        )
    return staircase
