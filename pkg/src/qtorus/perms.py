"""Symmetric-group combinatorics on one-line permutations and integer vectors."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import DegreeMismatch

MAX_DEGREE = 8


class Perm(tuple):
    """A permutation of {1..n} in one-line notation: ``p[k-1] == p(k)``."""

    __slots__ = ()

    def __new__(cls, images):
        images = tuple(int(k) for k in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{list(images)} is not a permutation of 1..{len(images)}")
        return tuple.__new__(cls, images)

    @classmethod
    def _trusted(cls, images) -> Perm:
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls._trusted(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Perm:
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls._trusted(images)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, k: int) -> int:
        return self[k - 1]

    def __mul__(self, other: Perm) -> Perm:
        return compose(self, other)

    def inverse(self) -> Perm:
        out = [0] * len(self)
        for k, img in enumerate(self, start=1):
            out[img - 1] = k
        return Perm._trusted(out)

    def is_identity(self) -> bool:
        return all(img == k for k, img in enumerate(self, start=1))

    def inversions(self) -> list[tuple[int, int]]:
        """Pairs i < j with p(i) > p(j)."""
        n = len(self)
        return [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if self[i - 1] > self[j - 1]
        ]

    def sign(self) -> int:
        return -1 if len(self.inversions()) % 2 else 1

    def __repr__(self):
        return f"Perm({list(self)})"

    def __str__(self):
        return str(list(self))


def compose(a: Perm, b: Perm) -> Perm:
    """(a o b)(k) = a(b(k))."""
    if len(a) != len(b):
        raise DegreeMismatch(f"degrees {len(a)} and {len(b)} differ")
    return Perm._trusted(a[k - 1] for k in b)


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    """All of S_n in lexicographic order of one-line notation."""
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds the hard cap {MAX_DEGREE}")
    return tuple(Perm._trusted(p) for p in itertools.permutations(range(1, n + 1)))


def act(sigma: Perm, r) -> tuple[int, ...]:
    """Left action (sigma r)_i = r_{sigma^{-1}(i)}."""
    if len(sigma) != len(r):
        raise DegreeMismatch(f"permutation of degree {len(sigma)} on vector of length {len(r)}")
    out = [0] * len(r)
    for k, img in enumerate(sigma):
        out[img - 1] = r[k]
    return tuple(out)


def orbit_representative(r) -> tuple[int, ...]:
    """Weakly decreasing reordering; equal iff same S_n-orbit."""
    return tuple(sorted(r, reverse=True))


def is_orbit_representative(r) -> bool:
    return tuple(r) == orbit_representative(r)


@dataclass(frozen=True)
class Subgroup:
    n: int
    elements: tuple[Perm, ...]
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))
        if not self.check:
            return
        ident = Perm.identity(self.n)
        if ident not in self.elements:
            raise ValueError("subgroup must contain the identity")
        members = set(self.elements)
        for a in self.elements:
            if a.inverse() not in members:
                raise ValueError("subgroup not closed under inversion")
            for b in self.elements:
                if compose(a, b) not in members:
                    raise ValueError("subgroup not closed under composition")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, sigma) -> bool:
        return sigma in self._members()

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def _members(self) -> frozenset:
        return _member_set(self.elements)

    def conjugate(self, sigma: Perm) -> Subgroup:
        inv = sigma.inverse()
        return Subgroup(self.n, tuple(sigma * h * inv for h in self.elements), check=False)

    def orbits(self) -> list[tuple[int, ...]]:
        """Orbits of the subgroup on {1..n} (the classes of i ~_H j)."""
        seen, out = set(), []
        for i in range(1, self.n + 1):
            if i in seen:
                continue
            orb = tuple(sorted({h(i) for h in self.elements}))
            seen.update(orb)
            out.append(orb)
        return out

    def related(self, i: int, j: int) -> bool:
        return any(h(j) == i for h in self.elements)


@lru_cache(maxsize=None)
def _member_set(elements) -> frozenset:
    return frozenset(elements)


def symmetric_group(n: int) -> Subgroup:
    return Subgroup(n, all_perms(n), check=False)


def trivial_subgroup(n: int) -> Subgroup:
    return Subgroup(n, (Perm.identity(n),))


@lru_cache(maxsize=None)
def stabilizer(r, n: int | None = None) -> Subgroup:
    r = tuple(r)
    n = len(r) if n is None else n
    if n != len(r):
        raise DegreeMismatch(f"vector of length {len(r)} in degree {n}")
    return Subgroup(n, tuple(s for s in all_perms(n) if act(s, r) == r), check=False)


def young_blocks(r) -> list[tuple[int, ...]]:
    """Position blocks of equal entries, ordered by first position."""
    blocks: dict[int, list[int]] = {}
    for pos, val in enumerate(r, start=1):
        blocks.setdefault(val, []).append(pos)
    return sorted((tuple(b) for b in blocks.values()), key=lambda b: b[0])


@dataclass(frozen=True)
class CosetDecomposition:
    """Right cosets H sigma_nu; ``reps[0]`` is the identity."""

    subgroup: Subgroup
    reps: tuple[Perm, ...]

    def __len__(self):
        return len(self.reps)

    def index_of(self, sigma: Perm) -> int:
        return self._lookup()[sigma][0]

    def locate(self, sigma: Perm) -> tuple[int, Perm]:
        """(nu, h) with sigma = h * reps[nu] and h in the subgroup."""
        return self._lookup()[sigma]

    def coset(self, nu: int) -> tuple[Perm, ...]:
        rep = self.reps[nu]
        return tuple(sorted(h * rep for h in self.subgroup))

    def _lookup(self) -> dict:
        return _coset_table(self)


@lru_cache(maxsize=None)
def _coset_table(dec: CosetDecomposition) -> dict:
    table = {}
    for nu, rep in enumerate(dec.reps):
        for h in dec.subgroup:
            table[h * rep] = (nu, h)
    return table


@lru_cache(maxsize=None)
def right_cosets(h: Subgroup) -> CosetDecomposition:
    seen: set[Perm] = set()
    reps = []
    for s in all_perms(h.n):  # lexicographic, so the first hit is the coset minimum
        if s in seen:
            continue
        reps.append(s)
        seen.update(g * s for g in h)
    return CosetDecomposition(h, tuple(reps))
