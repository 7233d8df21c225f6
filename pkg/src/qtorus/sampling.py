"""Deterministic random elements for property checks."""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import AlgebraElement, BasisAlgebra
from .scalar import Cyclo


def random_scalar(rng: random.Random, N: int, height: int = 3) -> Cyclo:
    c = Cyclo.zero(N)
    for _ in range(rng.randint(1, 2)):
        q = Fraction(rng.randint(-height, height), rng.randint(1, height))
        c = c + Cyclo.root(N, rng.randrange(N)) * q
    return c if c else Cyclo.one(N)


def random_key(A: BasisAlgebra, rng: random.Random, bound: int):
    r = tuple(rng.randint(-bound, bound) for _ in range(A.n))
    if hasattr(A, "perms"):
        return (rng.choice(A.perms), r)
    return r


def random_element(A: BasisAlgebra, rng: random.Random, terms: int = 3, bound: int = 2) -> AlgebraElement:
    out: dict = {}
    for _ in range(rng.randint(1, terms)):
        k = random_key(A, rng, bound)
        out[k] = out.get(k, Cyclo.zero(A.N)) + random_scalar(rng, A.N)
    return A.element(out)


def random_pairs(A: BasisAlgebra, count: int, seed: int = 0, terms: int = 3, bound: int = 2) -> list:
    rng = random.Random(seed)
    return [(random_element(A, rng, terms, bound), random_element(A, rng, terms, bound)) for _ in range(count)]


def random_theta_upper(n: int, rng: random.Random, max_den: int = 6) -> dict:
    """Random strictly-upper theta entries with denominators <= max_den."""
    out = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = rng.randint(1, max_den)
            out[(i, j)] = Fraction(rng.randint(-d, d), d)
    return out
