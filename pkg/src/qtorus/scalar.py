"""Exact scalars: rationals, phases e^{2 pi i q}, and elements of Q(zeta_N).

Every coefficient in the engine is a :class:`Cyclo`, stored in the power basis
1, zeta, ..., zeta^(phi(N)-1) of Q[X]/(Phi_N).  Internally the vector is kept as
integer numerators over one common positive denominator, reduced so that
gcd(numerators, denominator) == 1; equality is therefore coefficient-wise.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import ConductorMismatch, DivisionByZero, NonEmbeddablePhase


# ---------------------------------------------------------------------------
# cyclotomic field tables


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (low degree first), den monic."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(out) - 1, -1, -1):
        c = num[shift + len(den) - 1]
        out[shift] = c
        if c:
            for t, d in enumerate(den):
                num[shift + t] -= c * d
    assert not any(num), "non-exact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> tuple[int, ...]:
    """Coefficients of Phi_N, lowest degree first."""
    if N < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (N - 1) + [1]  # X^N - 1
    for d in range(1, N):
        if N % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


def totient(N: int) -> int:
    return len(cyclotomic_poly(N)) - 1


class _Field:
    __slots__ = ("N", "phi", "powers", "units")

    def __init__(self, N: int):
        self.N = N
        phi_poly = cyclotomic_poly(N)
        self.phi = phi = len(phi_poly) - 1
        # canonical vectors of zeta^m for 0 <= m < N, stored sparsely
        powers = []
        vec = [1] + [0] * (phi - 1)
        for _ in range(N):
            powers.append(tuple((t, c) for t, c in enumerate(vec) if c))
            # multiply by zeta, then eliminate X^phi
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                for t in range(phi):
                    vec[t] -= top * phi_poly[t]
        self.powers = powers
        self.units = [a for a in range(1, N + 1) if math.gcd(a, N) == 1]


@lru_cache(maxsize=None)
def _field(N: int) -> _Field:
    return _Field(N)


def _reduce(f: _Field, vec: list[int]) -> list[int]:
    """Reduce sum_m vec[m] zeta^m (any length) to the power basis."""
    phi = f.phi
    if len(vec) <= phi:
        return vec + [0] * (phi - len(vec))
    out = vec[:phi]
    powers, N = f.powers, f.N
    for m in range(phi, len(vec)):
        c = vec[m]
        if c:
            for t, p in powers[m % N]:
                out[t] += c * p
    return out


# ---------------------------------------------------------------------------
# Cyclo


def _as_fraction(x) -> Fraction:
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact rational required, got {type(x).__name__}")


class Cyclo:
    """An element of Q(zeta_N) in canonical form."""

    __slots__ = ("N", "num", "den", "_hash")

    def __init__(self, N: int, coeffs=()):
        f = _field(N)
        fr = [_as_fraction(c) for c in coeffs]
        if len(fr) > f.phi:
            raise ValueError(f"expected at most {f.phi} coefficients for conductor {N}")
        fr += [Fraction(0)] * (f.phi - len(fr))
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        self._set(N, [c.numerator * (den // c.denominator) for c in fr], den)

    def _set(self, N, num, den):
        g = math.gcd(den, *num)
        if g != 1:
            num = [c // g for c in num]
            den //= g
        self.N = N
        self.num = tuple(num)
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, N: int, num: list[int], den: int) -> Cyclo:
        obj = cls.__new__(cls)
        if den < 0:
            num = [-c for c in num]
            den = -den
        obj._set(N, num, den)
        return obj

    # constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, N: int) -> Cyclo:
        return cls._raw(N, [0] * _field(N).phi, 1)

    @classmethod
    def one(cls, N: int) -> Cyclo:
        return cls.from_rational(N, 1)

    @classmethod
    def from_rational(cls, N: int, q) -> Cyclo:
        q = _as_fraction(q)
        num = [0] * _field(N).phi
        num[0] = q.numerator
        return cls._raw(N, num, q.denominator)

    @classmethod
    def root(cls, N: int, k: int) -> Cyclo:
        """zeta_N^k."""
        f = _field(N)
        num = [0] * f.phi
        for t, c in f.powers[k % N]:
            num[t] = c
        return cls._raw(N, num, 1)

    # inspection -------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.num[0], self.den)

    def to_complex(self) -> complex:
        """Numeric embedding zeta_N -> e^{2 pi i / N}; for cross-checks only."""
        z = cmath.exp(2j * cmath.pi / self.N)
        return sum(c * z**k for k, c in enumerate(self.num)) / self.den

    # arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> Cyclo:
        if isinstance(other, Cyclo):
            if other.N != self.N:
                raise ConductorMismatch(f"conductors {self.N} and {other.N} differ")
            return other
        try:
            return Cyclo.from_rational(self.N, _as_fraction(other))
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self.den, other.den
        if d1 == d2:
            return Cyclo._raw(self.N, [a + b for a, b in zip(self.num, other.num)], d1)
        return Cyclo._raw(
            self.N, [a * d2 + b * d1 for a, b in zip(self.num, other.num)], d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyclo._raw(self.N, [-a for a in self.num], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.num, other.num
        if not any(a[1:]):
            c = a[0]
            return Cyclo._raw(self.N, [c * x for x in b], self.den * other.den)
        if not any(b[1:]):
            c = b[0]
            return Cyclo._raw(self.N, [c * x for x in a], self.den * other.den)
        f = _field(self.N)
        prod = [0] * (2 * f.phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyclo._raw(self.N, _reduce(f, prod), self.den * other.den)

    __rmul__ = __mul__

    def mul_root(self, k: int) -> Cyclo:
        """self * zeta_N^k."""
        k %= self.N
        if k == 0:
            return self
        f = _field(self.N)
        vec = [0] * k + list(self.num)
        return Cyclo._raw(self.N, _reduce(f, vec), self.den)

    def galois(self, a: int) -> Cyclo:
        """Image under the automorphism zeta -> zeta^a, gcd(a, N) = 1."""
        f = _field(self.N)
        if math.gcd(a, self.N) != 1:
            raise ValueError("Galois exponent must be a unit mod N")
        out = [0] * f.phi
        for k, c in enumerate(self.num):
            if c:
                for t, p in f.powers[(a * k) % self.N]:
                    out[t] += c * p
        return Cyclo._raw(self.N, out, self.den)

    def conj(self) -> Cyclo:
        return self.galois(-1 % self.N) if self.N > 2 else self

    def norm(self) -> Fraction:
        """Field norm down to Q (product of all Galois conjugates)."""
        acc = Cyclo.one(self.N)
        for a in _field(self.N).units:
            acc = acc * self.galois(a)
        return acc.rational_value()

    def inv(self) -> Cyclo:
        if not self:
            raise DivisionByZero("inverse of zero in Q(zeta_N)")
        if self.is_rational():
            return Cyclo.from_rational(self.N, 1 / self.rational_value())
        rest = Cyclo.one(self.N)
        for a in _field(self.N).units:
            if a % self.N != 1:
                rest = rest * self.galois(a)
        nrm = (self * rest).rational_value()
        return rest * (1 / nrm)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, k: int) -> Cyclo:
        if k < 0:
            return self.inv() ** (-k)
        out = Cyclo.one(self.N)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison / hashing -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return self.N == other.N and self.den == other.den and self.num == other.num
        try:
            q = _as_fraction(other)
        except TypeError:
            return NotImplemented
        return self.is_rational() and Fraction(self.num[0], self.den) == q

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.N, self.num, self.den))
        return self._hash

    def __getstate__(self):
        return (self.N, self.num, self.den)

    def __setstate__(self, state):
        N, num, den = state
        self.N, self.num, self.den, self._hash = N, num, den, None

    # text -------------------------------------------------------------------

    def __repr__(self):
        return f"Cyclo({self.N}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif mag == 1:
                body = f"zeta({self.N})^{k}"
            else:
                body = f"{mag}*zeta({self.N})^{k}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


# ---------------------------------------------------------------------------
# phases


@dataclass(frozen=True)
class Phase:
    """The unit complex number e^{2 pi i q}, with q reduced into [0, 1)."""

    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", _as_fraction(self.q) % 1)

    def __mul__(self, other: Phase) -> Phase:
        return phase_mul(self, other)

    def __pow__(self, k: int) -> Phase:
        return phase_pow(self, k)

    def conj(self) -> Phase:
        return Phase(-self.q)

    def is_trivial(self) -> bool:
        return self.q == 0

    def order(self) -> int:
        return self.q.denominator

    def exponent(self, N: int) -> int:
        """k with e^{2 pi i q} = zeta_N^k."""
        k = self.q * N
        if k.denominator != 1:
            raise NonEmbeddablePhase(f"phase {self.q} does not embed in Q(zeta_{N})")
        return int(k)

    def to_cyclo(self, N: int) -> Cyclo:
        return cyclo_from_phase(self, N)

    def __str__(self):
        return f"e(2pi i*{self.q})"


ONE_PHASE = Phase(Fraction(0))


def phase_mul(a: Phase, b: Phase) -> Phase:
    return Phase(a.q + b.q)


def phase_pow(a: Phase, k: int) -> Phase:
    return Phase(a.q * k)


def cyclo_from_phase(a: Phase, N: int) -> Cyclo:
    return Cyclo.root(N, a.exponent(N))


def cyclo_add(x: Cyclo, y: Cyclo) -> Cyclo:
    return x + y


def cyclo_mul(x: Cyclo, y: Cyclo) -> Cyclo:
    return x * y


def cyclo_conj(x: Cyclo) -> Cyclo:
    return x.conj()


def cyclo_inv(x: Cyclo) -> Cyclo:
    return x.inv()


def conductor_for(theta, extra=()) -> int:
    """lcm of the denominators of theta's entries and of ``extra``."""
    entries = getattr(theta, "entries", theta)
    N = 1
    for row in entries:
        for x in row:
            N = math.lcm(N, _as_fraction(x).denominator)
    for e in extra:
        N = math.lcm(N, int(e))
    return N


def embed_cyclo(c: Cyclo, N: int) -> Cyclo:
    """Image of c under Q(zeta_M) -> Q(zeta_N), zeta_M -> zeta_N^(N/M), for M | N."""
    if c.N == N:
        return c
    if N % c.N:
        raise ConductorMismatch(f"Q(zeta_{c.N}) does not embed in Q(zeta_{N})")
    scale = N // c.N
    out = Cyclo.zero(N)
    for k, q in enumerate(c.coeffs):
        if q:
            out = out + Cyclo.root(N, k * scale) * q
    return out
