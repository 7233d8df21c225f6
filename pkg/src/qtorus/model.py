"""Cyclic finite model of the Hilbert-space representation: H = sum_sigma (C^M)^{(x) C(n,2)}.

Basis vectors eps_{sigma,v}, v: Lambda -> Z_M, Lambda = {(l1,l2) : l1 < l2}.
The model is exact because every diagonal phase has order dividing M.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import AlgebraElement
from .errors import BadTruncation, ConductorMismatch
from .multitorus import QuantumMultitorus
from .perms import Perm, all_perms
from .report import Report
from .scalar import Cyclo
from .torus import ThetaMatrix


class ModelSpace:
    def __init__(self, theta: ThetaMatrix, M: int | None = None, N: int | None = None):
        self.theta = theta
        self.n = theta.n
        self.N = theta.conductor() if N is None else int(N)
        self.M = self.N if M is None else int(M)
        cond = theta.conductor()
        if self.M <= 0 or self.M % cond:
            raise BadTruncation(f"M={self.M} must be a positive multiple of the phase conductor {cond}")
        if self.M % self.N and self.N % cond:
            raise BadTruncation(f"scalar field conductor {self.N} does not contain the theta phases")
        self.T = theta.scaled(self.N)
        self.perms = all_perms(self.n)
        self.pidx = {s: k for k, s in enumerate(self.perms)}
        self.lam = [(a, b) for a in range(1, self.n + 1) for b in range(a + 1, self.n + 1)]
        self.block = self.M ** len(self.lam)

    @property
    def dim(self) -> int:
        return len(self.perms) * self.block

    def index(self, sigma: Perm, v) -> int:
        code = 0
        for m in v:
            code = code * self.M + (m % self.M)
        return self.pidx[sigma] * self.block + code

    def vector(self, idx: int):
        p, code = divmod(idx, self.block)
        v = []
        for _ in self.lam:
            code, m = divmod(code, self.M)
            v.append(m)
        return self.perms[p], tuple(reversed(v))

    def basis(self):
        for s in self.perms:
            for v in itertools.product(range(self.M), repeat=len(self.lam)):
                yield s, v

    def component(self, sigma: Perm) -> range:
        start = self.pidx[sigma] * self.block
        return range(start, start + self.block)


@dataclass
class SparseOp:
    """Column-sparse matrix: cols[c] = {row: Cyclo}."""

    dim: int
    N: int
    cols: dict = field(default_factory=dict)

    @classmethod
    def identity(cls, dim: int, N: int) -> SparseOp:
        one = Cyclo.one(N)
        return cls(dim, N, {c: {c: one} for c in range(dim)})

    @classmethod
    def zero(cls, dim: int, N: int) -> SparseOp:
        return cls(dim, N, {})

    def _clean(self) -> SparseOp:
        self.cols = {c: col for c, col in ((c, {r: x for r, x in col.items() if x}) for c, col in self.cols.items())
                     if col}
        return self

    def __matmul__(self, other: SparseOp) -> SparseOp:
        out = {}
        for c, col in other.cols.items():
            acc: dict = {}
            for k, y in col.items():
                for r, x in self.cols.get(k, {}).items():
                    acc[r] = acc[r] + x * y if r in acc else x * y
            out[c] = acc
        return SparseOp(self.dim, self.N, out)._clean()

    def __add__(self, other: SparseOp) -> SparseOp:
        out = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            tgt = out.setdefault(c, {})
            for r, x in col.items():
                tgt[r] = tgt[r] + x if r in tgt else x
        return SparseOp(self.dim, self.N, out)._clean()

    def __neg__(self) -> SparseOp:
        return self.scale(Cyclo.from_rational(self.N, -1))

    def __sub__(self, other: SparseOp) -> SparseOp:
        return self + (-other)

    def scale(self, c) -> SparseOp:
        c = c if isinstance(c, Cyclo) else Cyclo.from_rational(self.N, c)
        if not c:
            return SparseOp.zero(self.dim, self.N)
        return SparseOp(self.dim, self.N, {k: {r: x * c for r, x in col.items()} for k, col in self.cols.items()})

    def adjoint(self) -> SparseOp:
        out: dict = {}
        for c, col in self.cols.items():
            for r, x in col.items():
                out.setdefault(r, {})[c] = x.conj()
        return SparseOp(self.dim, self.N, out)

    def __pow__(self, k: int) -> SparseOp:
        out = SparseOp.identity(self.dim, self.N)
        for _ in range(k):
            out = out @ self
        return out

    def is_zero(self) -> bool:
        return not self.cols

    def __bool__(self):
        return bool(self.cols)

    def __eq__(self, other):
        return isinstance(other, SparseOp) and self.dim == other.dim and (self - other).is_zero()

    def nnz(self) -> int:
        return sum(len(col) for col in self.cols.values())

    def max_column_weight(self) -> int:
        return max((len(col) for col in self.cols.values()), default=0)

    def triplets(self) -> list:
        return sorted((r, c, str(x)) for c, col in self.cols.items() for r, x in col.items())

    def __str__(self):
        return "\n".join(f"{r} {c} {x}" for r, c, x in self.triplets())


def _root(space: ModelSpace, k: int) -> Cyclo:
    return Cyclo.root(space.N, k % space.N)


def _phase_exp(space: ModelSpace, i: int, k: int, sigma: Perm, l2: int, reading: str) -> int:
    """Exponent (base zeta_N) of the diagonal factor base on lambda = (k, l2)."""
    T = space.T
    j = sigma(l2) if reading == "stated" else sigma.inverse()(l2)
    return -T[i - 1][j - 1] + T[k - 1][l2 - 1]


def build_U(i: int, k: int, space: ModelSpace, reading: str = "stated") -> SparseOp:
    """U_ik: zero on H_sigma unless sigma(k) = i; on a factor lambda it is the identity (k not in
    lambda), the diagonal phase (conj(w_{i,sigma(l2)}) w_{k,l2})^m (k = l1) or the shift m -> m+1 (k = l2)."""
    cols = {}
    for sigma, v in space.basis():
        if sigma(k) != i:
            continue
        e = 0
        w = list(v)
        for pos, (l1, l2) in enumerate(space.lam):
            if k == l1:
                e += _phase_exp(space, i, k, sigma, l2, reading) * v[pos]
            elif k == l2:
                w[pos] = (v[pos] + 1) % space.M
        cols[space.index(sigma, v)] = {space.index(sigma, w): _root(space, e)}
    return SparseOp(space.dim, space.N, cols)


def build_U_adjoint(i: int, k: int, space: ModelSpace, reading: str = "stated") -> SparseOp:
    """U_ik^* from its own displayed action (phase conjugated, shift m -> m-1)."""
    cols = {}
    for sigma, v in space.basis():
        if sigma(k) != i:
            continue
        e = 0
        w = list(v)
        for pos, (l1, l2) in enumerate(space.lam):
            if k == l1:
                e -= _phase_exp(space, i, k, sigma, l2, reading) * v[pos]
            elif k == l2:
                w[pos] = (v[pos] - 1) % space.M
        cols[space.index(sigma, v)] = {space.index(sigma, w): _root(space, e)}
    return SparseOp(space.dim, space.N, cols)


def projection(space: ModelSpace, sigma: Perm) -> SparseOp:
    one = Cyclo.one(space.N)
    return SparseOp(space.dim, space.N, {c: {c: one} for c in space.component(sigma)})


class MonoOp:
    """Partial phase-permutation matrix {col: (row, e)}: column col goes to zeta_N^e * row.

    Every generator image and every monomial image has this shape, so products and
    adjoints reduce to integer bookkeeping.
    """

    __slots__ = ("dim", "N", "m")

    def __init__(self, dim: int, N: int, m: dict):
        self.dim, self.N, self.m = dim, N, m

    @classmethod
    def from_sparse(cls, op: SparseOp) -> MonoOp:
        m = {}
        for c, col in op.cols.items():
            if len(col) != 1:
                raise ValueError("operator is not a partial phase-permutation")
            (r, x), = col.items()
            m[c] = (r, _root_exponent(x, op.N))
        return cls(op.dim, op.N, m)

    @classmethod
    def diagonal(cls, dim: int, N: int, cols) -> MonoOp:
        return cls(dim, N, {c: (c, 0) for c in cols})

    def __matmul__(self, other: MonoOp) -> MonoOp:
        mine, N = self.m, self.N
        out = {}
        for c, (k, e1) in other.m.items():
            hit = mine.get(k)
            if hit is not None:
                out[c] = (hit[0], (hit[1] + e1) % N)
        return MonoOp(self.dim, N, out)

    def adjoint(self) -> MonoOp:
        return MonoOp(self.dim, self.N, {r: (c, -e % self.N) for c, (r, e) in self.m.items()})

    def __eq__(self, other):
        return isinstance(other, MonoOp) and self.m == other.m

    def __bool__(self):
        return bool(self.m)

    def to_sparse(self) -> SparseOp:
        return SparseOp(self.dim, self.N, {c: {r: Cyclo.root(self.N, e)} for c, (r, e) in self.m.items()})


def _root_exponent(x: Cyclo, N: int) -> int:
    for k in range(N):
        if x == Cyclo.root(N, k):
            return k
    raise ValueError("entry is not a root of unity")


def combine(terms, N: int) -> dict:
    """sum_t c_t * op_t as {(col, row): Cyclo}, zero entries dropped; terms = [(MonoOp, Cyclo or int)]."""
    acc: dict = {}
    for op, c in terms:
        c = c if isinstance(c, Cyclo) else Cyclo.from_rational(N, c)
        if not c:
            continue
        pw: dict = {}
        for col, (row, e) in op.m.items():
            x = pw.get(e)
            if x is None:
                x = pw[e] = c.mul_root(e)
            key = (col, row)
            prev = acc.get(key)
            acc[key] = x if prev is None else prev + x
    return {k: v for k, v in acc.items() if v}


class Model:
    """Generators U_ik, adjoints and projections for a model space, with cached monomials."""

    def __init__(self, space: ModelSpace, reading: str = "stated"):
        self.space = space
        self.reading = reading
        n = space.n
        self.U_sparse = {(i, k): build_U(i, k, space, reading) for i in range(1, n + 1) for k in range(1, n + 1)}
        self.Us_sparse = {key: build_U_adjoint(*key, space, reading) for key in self.U_sparse}
        self.U = {key: MonoOp.from_sparse(op) for key, op in self.U_sparse.items()}
        self.Us = {key: MonoOp.from_sparse(op) for key, op in self.Us_sparse.items()}
        self.P = {s: MonoOp.diagonal(space.dim, space.N, space.component(s)) for s in space.perms}
        self._maps: dict = {}

    def monomial_map(self, sigma: Perm, r) -> MonoOp:
        """Image of x_sigma^r = u_{1,s^-1(1)}^{r_1} ... u_{n,s^-1(n)}^{r_n} p_sigma."""
        r = tuple(r)
        key = (sigma, r)
        hit = self._maps.get(key)
        if hit is not None:
            return hit
        last = max((i for i, ri in enumerate(r) if ri), default=None)
        if last is None:
            out = self.P[sigma]
        else:
            # peel the rightmost factor: x^r = x^{r - step e_last} g, and g commutes with P_sigma
            step = 1 if r[last] > 0 else -1
            prev = self.monomial_map(sigma, r[:last] + (r[last] - step,) + r[last + 1:])
            gens = self.U if step > 0 else self.Us
            out = prev @ gens[(last + 1, sigma.inverse()(last + 1))]
        self._maps[key] = out
        return out

    def monomial(self, sigma: Perm, r) -> SparseOp:
        return self.monomial_map(sigma, r).to_sparse()

    def _check(self, A):
        if not isinstance(A, QuantumMultitorus):
            raise TypeError("evaluate expects an element of the quantum multitorus")
        if A.theta != self.space.theta:
            raise ConductorMismatch("element and model use different theta")
        if A.N != self.space.N:
            raise ConductorMismatch(f"element conductor {A.N} differs from model conductor {self.space.N}")

    def terms(self, a: AlgebraElement) -> list:
        self._check(a.parent)
        return [(self.monomial_map(s, r), c) for (s, r), c in a.terms.items()]

    def evaluate(self, a: AlgebraElement) -> SparseOp:
        cols: dict = {}
        for (col, row), x in combine(self.terms(a), self.space.N).items():
            cols.setdefault(col, {})[row] = x
        return SparseOp(self.space.dim, self.space.N, cols)


def evaluate(a: AlgebraElement, space: ModelSpace) -> SparseOp:
    return Model(space).evaluate(a)


def verify_model_relations(space: ModelSpace, reading: str = "stated", report: Report | None = None) -> Report:
    rep = report or Report("model")
    mdl = Model(space, reading)
    n, N, dim = space.n, space.N, space.dim
    U, Us = mdl.U, mdl.Us
    one = MonoOp.diagonal(dim, N, range(dim))
    ident = combine([(one, 1)], N)
    w = lambda a, b: Cyclo.root(N, space.T[a - 1][b - 1] % N)  # noqa: E731
    rng = range(1, n + 1)
    tag = {"reading": reading, "M": space.M}

    for i in rng:
        for k in rng:
            p = {**tag, "i": i, "k": k}
            u, us = U[(i, k)], Us[(i, k)]
            rep.add("U_ik^* is the adjoint of U_ik", p, us == u.adjoint())
            rep.add("U_ik has at most one nonzero entry per column", p,
                    mdl.U_sparse[(i, k)].max_column_weight() <= 1)
            rep.add("U_ik U_ik^* U_ik = U_ik (partial isometry)", p, u @ us @ u == u)
            rep.add("U_ik normal", p, u @ us == us @ u)
            supp = [c for s in space.perms if s(k) == i for c in space.component(s)]
            rep.add("U_ik U_ik^* = projection onto sum of H_sigma with sigma(k) = i", p,
                    u @ us == MonoOp.diagonal(dim, N, supp))
    for i in rng:
        for j in rng:
            for k in rng:
                for l in rng:
                    lhs = combine([(U[(i, k)] @ U[(j, l)], 1), (U[(j, k)] @ U[(i, l)], w(j, i))], N)
                    rhs = combine([(U[(i, l)] @ U[(j, k)], w(k, l)), (U[(j, l)] @ U[(i, k)], w(j, i) * w(k, l))], N)
                    rep.add("quadratic exchange: U_ik U_jl + w_ji U_jk U_il = w_kl U_il U_jk + w_ji w_kl U_jl U_ik",
                            {**tag, "i": i, "j": j, "k": k, "l": l}, lhs == rhs)
    for k in rng:
        for l in rng:
            d = ident if k == l else {}
            s_a = combine([(U[(i, k)] @ Us[(i, l)], 1) for i in rng], N)
            s_b = combine([(Us[(i, l)] @ U[(i, k)], 1) for i in rng], N)
            rep.add("sum_i U_ik U_il^* = delta_kl", {**tag, "k": k, "l": l}, s_a == d)
            rep.add("sum_i U_il^* U_ik = delta_kl", {**tag, "k": k, "l": l}, s_b == d)
    for i in rng:
        for j in rng:
            if i == j:
                continue
            for k in rng:
                p = {**tag, "i": i, "j": j, "k": k}
                rep.add("U_jk U_ik^* = 0 (i != j)", p, not (U[(j, k)] @ Us[(i, k)]))
                rep.add("U_ik^* U_jk = 0 (i != j)", p, not (Us[(i, k)] @ U[(j, k)]))
    for i in rng:
        for j in rng:
            d = ident if i == j else {}
            rows = combine([(U[(i, k)] @ Us[(j, k)], 1) for k in rng], N)
            tr = combine([(U[(k, i)] @ Us[(k, j)], 1) for k in rng], N)
            rep.add("U U^* = 1", {**tag, "i": i, "j": j}, rows == d)
            rep.add("U^T (U^T)^* = 1", {**tag, "i": i, "j": j}, tr == d)
    for s in space.perms:
        prod = one
        inv = s.inverse()
        for i in rng:
            prod = prod @ U[(i, inv(i))] @ Us[(i, inv(i))]
        rep.add("prod_i U_{i,s^-1(i)} U_{i,s^-1(i)}^* = P_sigma", {**tag, "sigma": s}, prod == mdl.P[s])
    rep.add("sum_sigma P_sigma = 1", tag, combine([(mdl.P[s], 1) for s in space.perms], N) == ident)
    return rep


def check_homomorphism(A: QuantumMultitorus, space: ModelSpace, pairs, report: Report | None = None,
                       model: Model | None = None) -> Report:
    rep = report or Report("model")
    mdl = model or Model(space)
    n, N = A.n, space.N
    ev = lambda a: combine(mdl.terms(a), N)  # noqa: E731
    one = MonoOp.diagonal(space.dim, N, range(space.dim))
    rep.add("evaluate(1) = identity", {}, ev(A.one()) == combine([(one, 1)], N))
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            rep.add("evaluate(u_ik) = U_ik", {"i": i, "k": k}, ev(A.u_gen(i, k)) == combine([(mdl.U[(i, k)], 1)], N))
    for s in A.perms:
        rep.add("evaluate(p_sigma) = P_sigma", {"sigma": s}, ev(A.p_sigma(s)) == combine([(mdl.P[s], 1)], N))
    for idx, (a, b) in enumerate(pairs):
        ta, tb = mdl.terms(a), mdl.terms(b)
        prod = combine([(x @ y, c * d) for x, c in ta for y, d in tb], N)
        rep.add("evaluate(ab) = evaluate(a) evaluate(b)", {"sample": idx}, ev(a * b) == prod)
        adj = combine([(x.adjoint(), c.conj()) for x, c in ta], N)
        rep.add("evaluate(a^*) = evaluate(a)^*", {"sample": idx}, ev(a.star()) == adj)
    return rep


def check_faithfulness(A: QuantumMultitorus, space: ModelSpace, report: Report | None = None,
                       model: Model | None = None, budget: int = 2_000_000) -> Report:
    """No basis monomial with |r_i| < M is sent to zero.

    Certificate: each U_{i,s^-1(i)} and its adjoint permute the basis of H_sigma (with phases), so
    every x_sigma^r acts on H_sigma as an invertible phase-permutation.  The window is also
    evaluated explicitly (all of |r_i| < M when that fits ``budget`` column operations, else
    |r_i| <= 2).  The rank of the residue window 0 <= r_i < M inside B(H_sigma) is an extra,
    informational diagnostic when small enough.
    """
    from .linalg import rank

    rep = report or Report("model")
    mdl = model or Model(space)
    M, n, N = space.M, A.n, space.N
    cert = True
    for s in A.perms:
        block = set(space.component(s))
        inv = s.inverse()
        for i in range(1, n + 1):
            for g in (mdl.U[(i, inv(i))], mdl.Us[(i, inv(i))]):
                rows = {g.m[c][0] for c in block if c in g.m}
                if not (block <= set(g.m) and rows == block):
                    cert = False
    rep.add("generators x_{sigma,i} act bijectively on the basis of H_sigma", {"M": M}, cert)
    width = M - 1
    if len(A.perms) * (2 * M - 1) ** n * space.block > budget:
        width = min(width, 2)
    zero_hits = []
    for s in A.perms:
        for r in itertools.product(range(-width, width + 1), repeat=n):
            if not mdl.monomial_map(s, r):
                zero_hits.append((s, r))
    rep.add("evaluate(x_sigma^r) != 0 (explicit window)", {"M": M, "window": width}, not zero_hits,
            None if not zero_hits else str(zero_hits[:5]))
    rep.add("evaluate(x_sigma^r) != 0 for |r_i| < M", {"M": M}, cert and not zero_hits)
    seen: dict = {}
    clashes = []
    for s in A.perms:
        for r in itertools.product(range(-width, width + 1), repeat=n):
            key = frozenset(mdl.monomial_map(s, r).m.items())
            if key in seen:
                clashes.append((seen[key], (s, r)))
            else:
                seen[key] = (s, r)
    rep.add("distinct basis monomials have distinct images", {"M": M, "window": width}, not clashes,
            None if not clashes else f"{len(clashes)} coincidences, e.g. {clashes[:3]}", informational=True)
    if M ** n * space.block <= 50_000:
        for s in A.perms:
            groups: dict = {}
            for r in itertools.product(range(M), repeat=n):
                m = mdl.monomial_map(s, r).m
                pattern = tuple(sorted((c, row) for c, (row, _) in m.items()))
                groups.setdefault(pattern, []).append([Cyclo.root(N, m[c][1]) for c, _ in pattern])
            rk = sum(rank(rows, len(rows[0]), N) for rows in groups.values())
            rep.add("residue-window monomials linearly independent in B(H_sigma)",
                    {"sigma": s, "M": M, "rank": rk, "count": M ** n}, rk == M ** n, informational=True)
    return rep
