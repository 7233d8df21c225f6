"""The noncommutative n-torus Poly(T_theta^n) in its monomial basis x^r."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import AlgebraElement, BasisAlgebra
from .errors import DegreeMismatch, IndexOutOfRange, ThetaMismatch
from .scalar import Cyclo, Phase, _as_fraction, conductor_for


@dataclass(frozen=True)
class ThetaMatrix:
    n: int
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(_as_fraction(x) for x in row) for row in self.entries)
        if len(rows) != self.n or any(len(row) != self.n for row in rows):
            raise DegreeMismatch(f"theta must be {self.n}x{self.n}")
        for i in range(self.n):
            if rows[i][i] != 0:
                raise ValueError(f"theta[{i + 1},{i + 1}] must be 0")
            for j in range(i + 1, self.n):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError(f"theta is not skew-symmetric at ({i + 1},{j + 1})")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def zero(cls, n: int) -> ThetaMatrix:
        return cls(n, tuple((0,) * n for _ in range(n)))

    @classmethod
    def from_upper(cls, n: int, upper: dict) -> ThetaMatrix:
        """Build from {(i, j): theta_ij} with 1 <= i < j <= n (1-based)."""
        rows = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), q in upper.items():
            if not (1 <= i <= n and 1 <= j <= n) or i == j:
                raise IndexOutOfRange(f"theta index ({i},{j}) out of range for n={n}")
            q = _as_fraction(q)
            rows[i - 1][j - 1] = q
            rows[j - 1][i - 1] = -q
        return cls(n, tuple(tuple(r) for r in rows))

    def __call__(self, i: int, j: int) -> Fraction:
        return self.entries[i - 1][j - 1]

    def omega(self, i: int, j: int) -> Phase:
        return Phase(self(i, j))

    def conductor(self) -> int:
        return conductor_for(self.entries)

    def scaled(self, N: int) -> tuple:
        """theta * N as an integer table (mod N); N must clear all denominators."""
        return _scaled(self, N)

    def __str__(self):
        return "[" + "; ".join(" ".join(str(x) for x in row) for row in self.entries) + "]"


@lru_cache(maxsize=None)
def _scaled(theta: ThetaMatrix, N: int) -> tuple:
    from .errors import NonEmbeddablePhase

    out = []
    for row in theta.entries:
        cur = []
        for q in row:
            if (q * N).denominator != 1:
                raise NonEmbeddablePhase(f"theta entry {q} is not an N-th root phase for N={N}")
            cur.append(int(q * N) % N)
        out.append(tuple(cur))
    return tuple(out)


def reorder_phase(theta: ThetaMatrix, r, s) -> Phase:
    """rho(r, s) with x^r x^s = rho(r, s) x^{r+s}: each x_i in x^r moves past x_j in x^s for i > j."""
    q = Fraction(0)
    for i in range(theta.n):
        if r[i] == 0:
            continue
        for j in range(i):
            if s[j]:
                q += theta.entries[i][j] * r[i] * s[j]
    return Phase(q)


def star_phase(theta: ThetaMatrix, r) -> Phase:
    """c(r) with (x^r)^* = c(r) x^{-r}."""
    return reorder_phase(theta, r, r)


def _exp_pair(T, N: int, r, s) -> int:
    e = 0
    for i, ri in enumerate(r):
        if ri:
            row = T[i]
            for j in range(i):
                if s[j]:
                    e += row[j] * ri * s[j]
    return e % N


@dataclass(frozen=True)
class FiltrationIndex:
    p: int
    q: int


def filtration_index(r) -> FiltrationIndex:
    return FiltrationIndex(sum(max(x, 0) for x in r), sum(max(-x, 0) for x in r))


class NCTorus(BasisAlgebra):
    """Parent of torus elements for a fixed theta and coefficient field Q(zeta_N)."""

    kind = "torus"

    def __init__(self, theta: ThetaMatrix, N: int | None = None):
        self.theta = theta
        self.n = theta.n
        self.N = theta.conductor() if N is None else int(N)
        self._T = theta.scaled(self.N)  # validates embeddability

    def __eq__(self, other):
        return isinstance(other, NCTorus) and self.theta == other.theta and self.N == other.N

    def __hash__(self):
        return hash((self.theta, self.N))

    def __repr__(self):
        return f"NCTorus(n={self.n}, theta={self.theta}, N={self.N})"

    def _mul_keys(self, r, s):
        return tuple(a + b for a, b in zip(r, s)), _exp_pair(self._T, self.N, r, s)

    def _star_key(self, r):
        return tuple(-a for a in r), _exp_pair(self._T, self.N, r, r)

    def format_key(self, r) -> str:
        return "x^[" + ",".join(str(a) for a in r) + "]"

    # ---- constructors

    def _vec(self, r) -> tuple:
        r = tuple(int(a) for a in r)
        if len(r) != self.n:
            raise DegreeMismatch(f"exponent of length {len(r)} for n={self.n}")
        return r

    def monomial(self, r, coeff=1) -> AlgebraElement:
        return self.basis_element(self._vec(r), coeff)

    def one(self) -> AlgebraElement:
        return self.basis_element((0,) * self.n)

    def gen(self, i: int) -> AlgebraElement:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"generator x{i} out of range for n={self.n}")
        r = [0] * self.n
        r[i - 1] = 1
        return self.monomial(r)

    def gen_star(self, i: int) -> AlgebraElement:
        return self.gen(i).star()


TorusElement = AlgebraElement


def _as_torus(a: AlgebraElement) -> NCTorus:
    if not isinstance(a.parent, NCTorus):
        raise ThetaMismatch("expected a torus element")
    return a.parent


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b


def star(a: AlgebraElement) -> AlgebraElement:
    return a.star()


def trace_phi(a: AlgebraElement) -> Cyclo:
    return a.coefficient((0,) * _as_torus(a).n)


def degree_decompose(a: AlgebraElement) -> dict:
    _as_torus(a)
    return dict(a.items())


def torus_action(a: AlgebraElement, t) -> AlgebraElement:
    """gamma_t for t a tuple of Phases: x^r -> t^r x^r."""
    A = _as_torus(a)
    out = {}
    for r, c in a.terms.items():
        ph = Phase(0)
        for ti, ri in zip(t, r):
            ph = ph * (ti ** ri)
        out[r] = c * ph.to_cyclo(A.N)
    return A.element(out)


def laplacian(a: AlgebraElement) -> AlgebraElement:
    A = _as_torus(a)
    return A.element({r: c * -sum(x * x for x in r) for r, c in a.terms.items()})
