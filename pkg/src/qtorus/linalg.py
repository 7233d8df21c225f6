"""Exact dense/sparse linear algebra over Q(zeta_N) (Cyclo entries)."""

from __future__ import annotations

from .errors import DivisionByZero
from .scalar import Cyclo


def mat_mul(a, b, N: int):
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    zero = Cyclo.zero(N)
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = zero
            for k in range(m):
                x, y = a[i][k], b[k][j]
                if x and y:
                    acc = acc + x * y
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def identity(d: int, N: int):
    one, zero = Cyclo.one(N), Cyclo.zero(N)
    return tuple(tuple(one if i == j else zero for j in range(d)) for i in range(d))


def conj_transpose(a):
    return tuple(tuple(a[j][i].conj() for j in range(len(a))) for i in range(len(a[0])))


def kron(a, b, N: int):
    out = []
    for ra in a:
        for rb in b:
            out.append(tuple(x * y for x in ra for y in rb))
    return tuple(out)


def is_unitary(a, N: int) -> bool:
    return mat_mul(a, conj_transpose(a), N) == identity(len(a), N)


def nullspace(rows, ncols: int, N: int) -> list[list[Cyclo]]:
    """Basis of {x : R x = 0}; ``rows`` are dicts col -> Cyclo (sparse) or sequences."""
    sparse = []
    for r in rows:
        if isinstance(r, dict):
            d = {k: v for k, v in r.items() if v}
        else:
            d = {k: v for k, v in enumerate(r) if v}
        if d:
            sparse.append(d)
    pivots: dict[int, dict] = {}  # pivot column -> normalized row (pivot coefficient 1)
    for row in sparse:
        row = dict(row)
        # eliminate existing pivots
        for pc, prow in pivots.items():
            c = row.get(pc)
            if c:
                for k, v in prow.items():
                    nv = row.get(k, Cyclo.zero(N)) - c * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        if not row:
            continue
        pc = min(row)
        inv = row[pc].inv()
        row = {k: v * inv for k, v in row.items()}
        # back-substitute into existing pivots to stay reduced
        for qc, qrow in pivots.items():
            c = qrow.get(pc)
            if c:
                for k, v in row.items():
                    nv = qrow.get(k, Cyclo.zero(N)) - c * v
                    if nv:
                        qrow[k] = nv
                    else:
                        qrow.pop(k, None)
        pivots[pc] = row
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Cyclo.zero(N)] * ncols
        vec[f] = Cyclo.one(N)
        for pc, prow in pivots.items():
            c = prow.get(f)
            if c:
                vec[pc] = -c
        basis.append(vec)
    return basis


def rank(rows, ncols: int, N: int) -> int:
    return ncols - len(nullspace(rows, ncols, N))


def solve_unique(rows, rhs, ncols: int, N: int) -> list[Cyclo]:
    """Solve R x = rhs, requiring a unique solution."""
    aug = []
    for r, b in zip(rows, rhs):
        d = dict(r) if isinstance(r, dict) else {k: v for k, v in enumerate(r) if v}
        if b:
            d[ncols] = -b
        aug.append(d)
    ns = nullspace(aug, ncols + 1, N)
    hom = [v for v in ns if not v[ncols]]
    inhom = [v for v in ns if v[ncols]]
    if hom or len(inhom) != 1:
        raise DivisionByZero("linear system has no unique solution")
    v = inhom[0]
    s = v[ncols].inv()
    return [x * s for x in v[:ncols]]
