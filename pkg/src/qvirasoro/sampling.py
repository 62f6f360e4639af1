"""Seeded random Laurent polynomials for the randomized verification suites.

Exponents are uniform in ``[-max_degree, max_degree]`` and coefficients are
nonzero integers uniform in ``[-9, 9]``; each polynomial has 3 to 6 distinct
terms (fewer only if the exponent range is too small). ``random.Random`` is
used because its integer sampling is reproducible across platforms for a
given seed.
"""
from __future__ import annotations

import random

from .qscalar import EXACT
from .qseries import LaurentPoly

_COEFFS = [c for c in range(-9, 10) if c]


def random_laurent(rng: random.Random, max_degree: int, field=EXACT) -> LaurentPoly:
    exps = list(range(-max_degree, max_degree + 1))
    k = min(rng.randint(3, 6), len(exps))
    chosen = sorted(rng.sample(exps, k))
    return LaurentPoly({e: rng.choice(_COEFFS) for e in chosen}, field)


def random_triples(seed: int, count: int, max_degree: int, field=EXACT):
    rng = random.Random(seed)
    return [tuple(random_laurent(rng, max_degree, field) for _ in range(3))
            for _ in range(count)]


def random_modes(seed: int, max_mode: int) -> dict[int, complex]:
    """Complex coefficients uniform in the unit square on modes ``|k| <= max_mode``."""
    rng = random.Random(seed)
    return {k: complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            for k in range(-max_mode, max_mode + 1)}
