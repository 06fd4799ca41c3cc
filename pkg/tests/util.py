"""Shared generators for the randomized suites (seeded, reproducible)."""

from __future__ import annotations

import random

from formes import FLIP, IDENTITY, SWAP, QuadraticForm, UnimodularTransform, compose


def random_form(rng: random.Random, bound: int = 40) -> QuadraticForm:
    return QuadraticForm(
        rng.randint(-bound, bound), rng.randint(-bound, bound), rng.randint(-bound, bound)
    )


def random_unimodular(rng: random.Random, steps: int = 5, shear: int = 4) -> UnimodularTransform:
    """A product of random shears, swaps and flips: always determinant +-1."""
    t = IDENTITY
    for _ in range(rng.randint(1, steps)):
        kind = rng.randrange(4)
        if kind == 0:
            t = compose(t, UnimodularTransform(1, rng.randint(-shear, shear), 0, 1))
        elif kind == 1:
            t = compose(t, UnimodularTransform(1, 0, rng.randint(-shear, shear), 1))
        elif kind == 2:
            t = compose(t, SWAP)
        else:
            t = compose(t, FLIP)
    return t


def coprime_pair(rng: random.Random, bound: int) -> tuple[int, int]:
    from math import gcd

    while True:
        s = rng.randint(-bound, bound)
        x = rng.randint(-bound, bound)
        if gcd(s, x) == 1:
            return s, x
