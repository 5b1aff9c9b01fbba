"""Truncated formal power series over exact rationals, one and two variables.

Series1 is a dense coefficient vector c[0..order]; arithmetic results carry the
minimum order of the operands.  Division cancels a common zero of the two
series at t = 0 (the quotient loses that many orders of precision).  These are
the building blocks for every generating-function cross-check in the package:
the polylogarithm in both sign regimes, the exponential kernels whose
coefficients are poly-Bernoulli values, and the bivariate kernel behind the
symmetrized two-variable polynomials.

Series2 is intentionally generic over its coefficient ring: the bivariate
oracle needs coefficients that are themselves polynomials in (x, y), so any
element supporting +, * and 0 + element works.
"""

from __future__ import annotations

from fractions import Fraction

from .exact_arith import eulerian, inv_int_pow

__all__ = [
    "Series1",
    "Series2",
    "ps_exp",
    "ps_one_minus_exp",
    "polylog_series",
    "polylog_neg_rational",
    "gf_kernel",
    "ps2_outer",
    "ps2_lonesum_kernel",
]

_Scalar = (int, Fraction)


class Series1:
    """Power series truncated at t^order (inclusive), Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs: tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Fraction:
        if n < 0 or n > self.order:
            raise IndexError("coefficient %d outside truncation order %d" % (n, self.order))
        return self.coeffs[n]

    def truncate(self, order: int) -> "Series1":
        if order > self.order:
            raise ValueError("cannot extend truncation order")
        return Series1(self.coeffs[: order + 1])

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, None if all stored are 0."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series1):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "Series1":
        if isinstance(other, _Scalar):
            other = Series1([other] + [0] * self.order)
        n = min(self.order, other.order)
        return Series1([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> "Series1":
        return Series1([-c for c in self.coeffs])

    def __sub__(self, other) -> "Series1":
        if isinstance(other, _Scalar):
            other = Series1([other] + [0] * self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "Series1":
        if isinstance(other, _Scalar):
            return Series1([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return Series1(out)

    __rmul__ = __mul__

    def __truediv__(self, other: "Series1") -> "Series1":
        """Division cancelling a common zero at t = 0.

        Requires val(other) <= val(self); the quotient is truncated at
        min(order) - val(other).
        """
        v = other.valuation()
        if v is None:
            raise ZeroDivisionError("division by a series that is 0 to its order")
        va = self.valuation()
        if va is not None and va < v:
            raise ValueError("division would produce negative powers of t")
        n = min(self.order, other.order) - v
        if n < 0:
            raise ValueError("no orders left after cancelling the common zero")
        a = list(self.coeffs[v : v + n + 1])
        while len(a) < n + 1:
            a.append(Fraction(0))
        b = other.coeffs[v : v + n + 1]
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            acc = a[i]
            for j in range(1, i + 1):
                if j < len(b):
                    acc -= b[j] * out[i - j]
            out[i] = acc / b[0]
        return Series1(out)

    def compose(self, inner: "Series1") -> "Series1":
        """self(inner(t)); inner must vanish at t = 0."""
        if inner.coeffs[0] != 0:
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        acc = Series1([Fraction(0)] * (n + 1))
        for c in reversed(self.coeffs[: n + 1]):
            acc = acc * inner + c
        return acc

    def integrate_over_t(self) -> "Series1":
        """t |-> integral_0^t f(s)/s ds; requires a zero constant term.

        Sends sum c_n t^n to sum (c_n/n) t^n, the polylogarithm index-raising
        map.
        """
        if self.coeffs[0] != 0:
            raise ValueError("integrand f/t needs f(0) = 0")
        return Series1(
            [Fraction(0)] + [c / n for n, c in enumerate(self.coeffs) if n >= 1]
        )

    def __repr__(self) -> str:
        return "Series1(%r)" % (self.coeffs,)


def ps_exp(c, order: int) -> Series1:
    """exp(c t) truncated at t^order."""
    c = Fraction(c)
    coeffs = [Fraction(1)]
    for n in range(1, order + 1):
        coeffs.append(coeffs[-1] * c / n)
    return Series1(coeffs)


def ps_one_minus_exp(c, order: int) -> Series1:
    """1 - exp(-c t): zero constant term, the polylogarithm's argument."""
    return 1 - ps_exp(-Fraction(c), order)


def polylog_series(k: int, order: int) -> Series1:
    """Li_k(z) = sum_{n>=1} z^n / n^k truncated at z^order, any integer k."""
    return Series1([Fraction(0)] + [inv_int_pow(n, k) for n in range(1, order + 1)])


def polylog_neg_rational(r: int, order: int) -> Series1:
    """Li_{-r} (r >= 0) from its closed rational form.

    Numerator sum_j <r, j> z^(j+1) over denominator (1 - z)^(r+1); for r >= 1
    the exponent j+1 is equivalent to the reversed r-j form by the symmetry of
    Eulerian numbers, and it is the one that also covers Li_0 = z/(1-z).
    """
    if r < 0:
        raise ValueError("polylog_neg_rational expects r >= 0")
    num = [Fraction(0)] * (order + 1)
    for j in range(max(r - 1, 0) + 1):
        if j + 1 <= order:
            num[j + 1] = Fraction(eulerian(r, j))
    one_minus_z = Series1([1, -1] + [0] * (order - 1))
    den = Series1([Fraction(1)] + [Fraction(0)] * order)
    for _ in range(r + 1):
        den = den * one_minus_z
    return Series1(num) / den


def gf_kernel(k: int, alpha, beta, x, order: int) -> Series1:
    """Li_k(1 - (ab)^(-t)) e^(xt) / (b^t - a^(-t)) truncated at t^order.

    alpha = ln a, beta = ln b, alpha + beta != 0.  Coefficient n times n! is
    the generalized poly-Bernoulli value B_n^(k)(x; a, b).
    """
    alpha, beta, x = Fraction(alpha), Fraction(beta), Fraction(x)
    if alpha + beta == 0:
        raise ValueError("gf_kernel needs alpha + beta != 0")
    n1 = order + 1
    inner = ps_one_minus_exp(alpha + beta, n1)
    num = polylog_series(k, n1).compose(inner) * ps_exp(x, n1)
    den = ps_exp(beta, n1) - ps_exp(-alpha, n1)
    return num / den


class Series2:
    """Bivariate truncated series; coefficient ring supplied by duck typing.

    coeffs[n][m] multiplies t^n u^m; the grid is (order_t+1) x (order_u+1).
    Works over Fractions or over Poly2 coefficients alike.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        rows = [tuple(row) for row in coeffs]
        if not rows or len({len(r) for r in rows}) != 1:
            raise ValueError("Series2 needs a rectangular, nonempty grid")
        self.coeffs: tuple[tuple, ...] = tuple(rows)

    @property
    def order_t(self) -> int:
        return len(self.coeffs) - 1

    @property
    def order_u(self) -> int:
        return len(self.coeffs[0]) - 1

    def coefficient(self, n: int, m: int):
        return self.coeffs[n][m]

    def __add__(self, other: "Series2") -> "Series2":
        nt = min(self.order_t, other.order_t)
        nu = min(self.order_u, other.order_u)
        return Series2(
            [
                [self.coeffs[n][m] + other.coeffs[n][m] for m in range(nu + 1)]
                for n in range(nt + 1)
            ]
        )

    def __mul__(self, other: "Series2") -> "Series2":
        nt = min(self.order_t, other.order_t)
        nu = min(self.order_u, other.order_u)
        out = [[0 for _ in range(nu + 1)] for _ in range(nt + 1)]
        for i in range(nt + 1):
            for j in range(nu + 1):
                a = self.coeffs[i][j]
                if isinstance(a, _Scalar) and a == 0:
                    continue
                for p in range(nt + 1 - i):
                    for q in range(nu + 1 - j):
                        b = other.coeffs[p][q]
                        if isinstance(b, _Scalar) and b == 0:
                            continue
                        out[i + p][j + q] = out[i + p][j + q] + a * b
        return Series2(out)

    def __repr__(self) -> str:
        return "Series2(order_t=%d, order_u=%d)" % (self.order_t, self.order_u)


def ps2_outer(f: Series1, g: Series1, order_t: int, order_u: int) -> Series2:
    """f(t) g(u) as a bivariate grid."""
    if f.order < order_t or g.order < order_u:
        raise ValueError("factor series too short for the requested grid")
    return Series2(
        [
            [f.coeffs[n] * g.coeffs[m] for m in range(order_u + 1)]
            for n in range(order_t + 1)
        ]
    )


def ps2_lonesum_kernel(order_t: int, order_u: int) -> Series2:
    """1 / (e^t + e^u - e^{t+u}), i.e. 1 / (1 - (e^t - 1)(e^u - 1)).

    Expanded geometrically: sum_j (e^t - 1)^j (e^u - 1)^j; the factor
    (e^t - 1)^j starts at t^j so the sum truncates at j = min(orders).
    Fraction coefficients.
    """
    em1_t = ps_exp(1, order_t) - 1
    em1_u = ps_exp(1, order_u) - 1
    acc = None
    pt = Series1([Fraction(1)] + [Fraction(0)] * order_t)
    pu = Series1([Fraction(1)] + [Fraction(0)] * order_u)
    for _ in range(min(order_t, order_u) + 1):
        term = ps2_outer(pt, pu, order_t, order_u)
        acc = term if acc is None else acc + term
        pt = pt * em1_t
        pu = pu * em1_u
    return acc
