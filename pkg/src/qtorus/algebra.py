"""Shared machinery for algebras with a monomial basis and Cyclo coefficients.

A parent supplies ``_mul_keys(a, b)`` returning ``(key, k)`` meaning
``basis[a] * basis[b] = zeta_N^k * basis[key]`` (or ``None`` for zero), and
``_star_key(a)`` returning ``(key, k)`` with ``basis[a]^* = zeta_N^k basis[key]``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ThetaMismatch
from .scalar import Cyclo, embed_cyclo


class BasisAlgebra:
    N: int
    kind: str

    def _mul_keys(self, a, b):
        raise NotImplementedError

    def _star_key(self, a):
        raise NotImplementedError

    def format_key(self, key) -> str:
        raise NotImplementedError

    def sort_key(self, key):
        return key

    def scalar(self, c) -> Cyclo:
        if isinstance(c, Cyclo):
            return c if c.N == self.N else embed_cyclo(c, self.N)
        return Cyclo.from_rational(self.N, c)

    def element(self, terms) -> AlgebraElement:
        return AlgebraElement(self, terms)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {}, pruned=True)

    def basis_element(self, key, coeff=1) -> AlgebraElement:
        return AlgebraElement(self, {key: self.scalar(coeff)})


class AlgebraElement:
    """Finite linear combination of basis monomials; zero coefficients pruned."""

    __slots__ = ("parent", "terms")

    def __init__(self, parent: BasisAlgebra, terms, pruned: bool = False):
        self.parent = parent
        if pruned:
            self.terms = terms
        else:
            self.terms = {k: parent.scalar(c) for k, c in dict(terms).items()}
            self.terms = {k: c for k, c in self.terms.items() if c}

    # ------------------------------------------------------------------ basics

    def _check(self, other: AlgebraElement):
        if self.parent != other.parent:
            raise ThetaMismatch("elements belong to different algebras")

    def _coerce(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Cyclo)):
            return self.parent.one() * self.parent.scalar(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, key) -> Cyclo:
        return self.terms.get(key, Cyclo.zero(self.parent.N))

    def support(self) -> list:
        return sorted(self.terms, key=self.parent.sort_key)

    def items(self):
        for k in self.support():
            yield k, self.terms[k]

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    __hash__ = None

    # -------------------------------------------------------------- arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return AlgebraElement(self.parent, out, pruned=True)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return AlgebraElement(self.parent, {k: -c for k, c in self.terms.items()}, pruned=True)

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

    def scale(self, c) -> AlgebraElement:
        c = self.parent.scalar(c)
        if not c:
            return self.parent.zero()
        return AlgebraElement(self.parent, {k: v * c for k, v in self.terms.items()}, pruned=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        mul_keys = self.parent._mul_keys
        acc: dict = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                res = mul_keys(ka, kb)
                if res is None:
                    continue
                key, e = res
                c = (ca * cb).mul_root(e) if e else ca * cb
                prev = acc.get(key)
                acc[key] = c if prev is None else prev + c
        return AlgebraElement(self.parent, {k: c for k, c in acc.items() if c}, pruned=True)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> AlgebraElement:
        if k < 0:
            raise ValueError("negative powers: use star() of a unitary element")
        out = self.parent.one()
        for _ in range(k):
            out = out * self
        return out

    def star(self) -> AlgebraElement:
        star_key = self.parent._star_key
        acc = {}
        for k, c in self.terms.items():
            key, e = star_key(k)
            acc[key] = c.conj().mul_root(e)
        return AlgebraElement(self.parent, acc, pruned=True)

    def map_coefficients(self, fn) -> AlgebraElement:
        return AlgebraElement(self.parent, {k: fn(k, c) for k, c in self.terms.items()})

    # -------------------------------------------------------------------- text

    def __str__(self):
        return format_terms(self.items(), self.parent.format_key)

    def __repr__(self):
        return f"<{self.parent.kind} element {self}>"


def format_coeff_term(c: Cyclo, body: str, first: bool) -> str:
    if c.is_rational():
        q = c.rational_value()
        sign = "-" if q < 0 else "+"
        mag = abs(q)
        text = body if mag == 1 else f"{mag} * {body}"
    else:
        sign = "+"
        text = f"({c}) * {body}"
    if first:
        return ("-" if sign == "-" else "") + text
    return f" {sign} {text}"


def format_terms(items, format_key) -> str:
    out = ""
    for idx, (k, c) in enumerate(items):
        out += format_coeff_term(c, format_key(k), idx == 0)
    return out or "0"


# ---------------------------------------------------------------------------
# tensor products


class TensorAlgebra(BasisAlgebra):
    """Algebraic tensor product of basis algebras; keys are tuples of factor keys."""

    def __init__(self, *factors: BasisAlgebra):
        if len({f.N for f in factors}) != 1:
            from .errors import ConductorMismatch

            raise ConductorMismatch("tensor factors must share one conductor")
        self.factors = tuple(factors)
        self.N = factors[0].N
        self.kind = " (x) ".join(f.kind for f in factors)

    def __eq__(self, other):
        return isinstance(other, TensorAlgebra) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def _mul_keys(self, a, b):
        keys, e = [], 0
        for f, ka, kb in zip(self.factors, a, b):
            res = f._mul_keys(ka, kb)
            if res is None:
                return None
            keys.append(res[0])
            e += res[1]
        return tuple(keys), e % self.N

    def _star_key(self, a):
        keys, e = [], 0
        for f, ka in zip(self.factors, a):
            k, x = f._star_key(ka)
            keys.append(k)
            e += x
        return tuple(keys), e % self.N

    def format_key(self, key) -> str:
        return " (x) ".join(f.format_key(k) for f, k in zip(self.factors, key))

    def sort_key(self, key):
        return tuple(f.sort_key(k) for f, k in zip(self.factors, key))

    def one(self) -> AlgebraElement:
        return tensor(*(f.one() for f in self.factors))


def tensor(*elements: AlgebraElement) -> AlgebraElement:
    parent = TensorAlgebra(*(e.parent for e in elements))
    acc = {(): Cyclo.one(parent.N)}
    for e in elements:
        nxt = {}
        for key, c in acc.items():
            for k, d in e.terms.items():
                nxt[key + (k,)] = c * d
        acc = nxt
    return AlgebraElement(parent, {k: c for k, c in acc.items() if c}, pruned=True)


def expand_slot(t: AlgebraElement, slot: int, fn, target: BasisAlgebra) -> AlgebraElement:
    """Apply a linear map to one tensor leg.

    ``fn(key)`` returns a scalar (the leg disappears), an element of a basis
    algebra (the leg is replaced), or an element of a TensorAlgebra (the leg is
    replaced by several legs).
    """
    acc: dict = {}
    for key, c in t.terms.items():
        head, tail = key[:slot], key[slot + 1:]
        val = fn(key[slot])
        if isinstance(val, AlgebraElement):
            spliced = isinstance(val.parent, TensorAlgebra)
            for k2, c2 in val.terms.items():
                nk = head + (k2 if spliced else (k2,)) + tail
                v = c * c2
                prev = acc.get(nk)
                acc[nk] = v if prev is None else prev + v
        else:
            v = c * val
            if not v:
                continue
            nk = head + tail
            prev = acc.get(nk)
            acc[nk] = v if prev is None else prev + v
    if not isinstance(target, TensorAlgebra):
        acc = {k[0]: c for k, c in acc.items()}
    return AlgebraElement(target, {k: c for k, c in acc.items() if c}, pruned=True)


def multiply_legs(t: AlgebraElement) -> AlgebraElement:
    """m : A (x) A -> A for a two-fold tensor over one algebra."""
    A, B = t.parent.factors
    out = A.zero()
    for (a, b), c in t.terms.items():
        out = out + (A.basis_element(a) * B.basis_element(b)).scale(c)
    return out
