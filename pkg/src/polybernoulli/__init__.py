"""Poly-Bernoulli numbers and polynomials, their two- and three-parameter
generalizations, symmetrized bivariate variants, and the associated
zeta-type function, in exact rational arithmetic with numeric routes where
the mathematics is genuinely transcendental.
"""

from .core import (
    bernoulli_numbers,
    bernoulli_poly,
    lonesum_count,
    pb_number,
    pb_number_neg_closed,
    pb_number_recurrence,
    pb_poly,
)
from .exact_arith import (
    Rat,
    binomial,
    eulerian,
    format_rat,
    inv_int_pow,
    parse_rat,
    stirling2,
)
from .generalized import (
    GPBPoly,
    Params,
    addition_formula,
    appell_derivative,
    gen_bernoulli_poly,
    gpb_explicit,
    gpb_explicit_c,
    gpb_number,
    multiplication_theorem,
    power_sum,
    recurrence_I,
    recurrence_II,
    scale_from_classical,
)
from .polynomials import Poly1, Poly2
from .symmetrized import duality_check, sym_closed, sym_def, sym_gf_oracle
from .zeta import (
    NonConvergenceError,
    NumericResult,
    ToleranceError,
    ZetaQuery,
    difference_exact,
    difference_series,
    hurwitz_zeta,
    polylog_on_kernel,
    raabe_numeric,
    raabe_poly,
    xi_exact_neg,
    xi_quadrature,
    xi_reduced,
    xi_series,
)

__version__ = "0.1.0"

__all__ = [
    "Rat",
    "binomial",
    "stirling2",
    "eulerian",
    "format_rat",
    "parse_rat",
    "inv_int_pow",
    "Poly1",
    "Poly2",
    "pb_number",
    "pb_poly",
    "pb_number_recurrence",
    "pb_number_neg_closed",
    "lonesum_count",
    "bernoulli_poly",
    "bernoulli_numbers",
    "Params",
    "GPBPoly",
    "gpb_explicit",
    "gpb_explicit_c",
    "gpb_number",
    "scale_from_classical",
    "gen_bernoulli_poly",
    "recurrence_I",
    "recurrence_II",
    "appell_derivative",
    "addition_formula",
    "multiplication_theorem",
    "power_sum",
    "sym_def",
    "sym_closed",
    "sym_gf_oracle",
    "duality_check",
    "ZetaQuery",
    "NumericResult",
    "NonConvergenceError",
    "ToleranceError",
    "hurwitz_zeta",
    "polylog_on_kernel",
    "xi_series",
    "xi_reduced",
    "xi_quadrature",
    "xi_exact_neg",
    "difference_exact",
    "difference_series",
    "raabe_poly",
    "raabe_numeric",
    "__version__",
]
