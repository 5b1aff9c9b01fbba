import random
from fractions import Fraction

from polybernoulli import Params


def rand_rat(rng: random.Random, lo=-8, hi=8, den_max=6, nonzero=False) -> Fraction:
    while True:
        q = Fraction(rng.randint(lo, hi), rng.randint(1, den_max))
        if q != 0 or not nonzero:
            return q


def rand_params(rng: random.Random, positive=False) -> Params:
    """Random rational (alpha, beta) with alpha+beta != 0."""
    while True:
        if positive:
            alpha = Fraction(rng.randint(1, 8), rng.randint(1, 4))
            beta = Fraction(rng.randint(1, 8), rng.randint(1, 4))
        else:
            alpha = rand_rat(rng, -5, 5, 4)
            beta = rand_rat(rng, -5, 5, 4)
        if alpha + beta != 0:
            return Params(alpha, beta)
