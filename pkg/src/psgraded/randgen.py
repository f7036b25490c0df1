"""Seeded random inputs for identity sweeps."""

from __future__ import annotations

import random

from .lattice import LinearForm, integer_kernel
from .poly import LaurentPoly


def trial_rng(seed: int, *keys) -> random.Random:
    """Independent stream per (seed, keys); string seeding is stable across runs."""
    return random.Random(":".join(str(k) for k in (seed,) + keys))


def random_poly(
    rng: random.Random, p: int, r: int, max_deg: int = 4, max_terms: int = 5, laurent: bool = True
) -> LaurentPoly:
    lo = -max_deg if laurent else 0
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = tuple(rng.randint(lo, max_deg) for _ in range(r))
        terms[e] = rng.randrange(1, p)
    return LaurentPoly(p, r, terms)


def random_form(rng: random.Random, r: int, bound: int = 3) -> LinearForm:
    while True:
        l = [rng.randint(-bound, bound) for _ in range(r)]
        if any(l):
            return LinearForm(tuple(l))


def random_homogeneous(
    rng: random.Random, lam: LinearForm, p: int, spread: int = 2, max_terms: int = 5, max_deg: int = 4
) -> LaurentPoly:
    """Anchor monomial shifted by small combinations of the kernel of lam."""
    r = lam.r
    anchor = [rng.randint(-max_deg, max_deg) for _ in range(r)]
    kern = integer_kernel([lam.l], r).basis
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = list(anchor)
        for v in kern:
            k = rng.randint(-spread, spread)
            e = [a + k * b for a, b in zip(e, v)]
        terms[tuple(e)] = rng.randrange(1, p)
    return LaurentPoly(p, r, terms)
