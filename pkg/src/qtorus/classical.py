"""Classical Mackey count for the semidirect product T^n x| S_n.

Independent of the quantum machinery: plain tuples, brute-force orbits, and the
irrep dimensions of each stabilizer recovered from group-theoretic counts alone
(number of conjugacy classes, abelianization order, sum of squares = |H|).
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def _compose(a, b):
    return tuple(a[b[k] - 1] for k in range(len(a)))


def _inverse(a):
    out = [0] * len(a)
    for k, x in enumerate(a, start=1):
        out[x - 1] = k
    return tuple(out)


def _act(p, r):
    out = [0] * len(r)
    for k, x in enumerate(r):
        out[p[k] - 1] = x
    return tuple(out)


def orbits(n: int, bound: int) -> list[frozenset]:
    perms = list(itertools.permutations(range(1, n + 1)))
    seen, out = set(), []
    for r in itertools.product(range(-bound, bound + 1), repeat=n):
        if r in seen:
            continue
        orb = frozenset(_act(p, r) for p in perms)
        seen |= orb
        out.append(orb)
    return out


def stabilizer(r) -> list[tuple]:
    n = len(r)
    return [p for p in itertools.permutations(range(1, n + 1)) if _act(p, r) == tuple(r)]


def conjugacy_classes(group: list) -> int:
    todo, count = set(group), 0
    while todo:
        g = todo.pop()
        todo -= {_compose(_compose(h, g), _inverse(h)) for h in group}
        count += 1
    return count


def abelianization_order(group: list) -> int:
    comm = {_compose(_compose(a, b), _compose(_inverse(a), _inverse(b))) for a in group for b in group}
    sub = set(comm)
    while True:
        grown = sub | {_compose(a, b) for a in sub for b in sub}
        if grown == sub:
            break
        sub = grown
    return len(group) // len(sub)


@lru_cache(maxsize=None)
def _dims(order: int, classes: int, linear: int) -> tuple:
    """The unique multiset of irrep dimensions with `linear` ones, `classes` entries in total,
    every d | order and sum d^2 = order."""
    rest = classes - linear
    target = order - linear
    cands = [d for d in range(2, order + 1) if order % d == 0 and d * d <= target]
    sols = [c for c in itertools.combinations_with_replacement(cands, rest) if sum(d * d for d in c) == target]
    if len(sols) != 1:
        raise ValueError(f"irrep dimensions not determined by counts (|H|={order}, classes={classes})")
    return (1,) * linear + sols[0]


def irrep_dims(group: list) -> tuple:
    return _dims(len(group), conjugacy_classes(group), abelianization_order(group))


def mackey_table(n: int, bound: int) -> list[tuple[tuple, int]]:
    """Sorted (orbit representative, dimension) pairs, one per irrep; the representative is
    the lexicographically largest point of the orbit."""
    out = []
    for orb in orbits(n, bound):
        rep = max(orb)
        for d in irrep_dims(stabilizer(rep)):
            out.append((rep, len(orb) * d))
    return sorted(out)
