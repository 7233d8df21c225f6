"""Expression parser for torus and multitorus elements.

Grammar (whitespace-insensitive except for postfix stars)::

    expr    := ['-'] term (('+' | '-') term)*
    term    := power (['*'] power)*            juxtaposition multiplies
    power   := primary ['^' ['-'] int]
    primary := int ['/' int] | 'zeta(' int ')' | atom | '(' expr ')'
    atom    := 'x' int ['*'] | 'u[' int ',' int ']' ['*'] | 'p[' perm ']'
             | 'x^[' ints ']' | 'm[sigma=[' ints '], r=[' ints ']]'

A '*' glued to an x/u atom is the adjoint when the next character cannot start an
operand (``x1*`` and ``x1* x2``); ``x1*x2`` is a product.  Every printed element
parses back to itself.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import AlgebraElement
from .errors import ExprSyntaxError
from .multitorus import QuantumMultitorus
from .perms import Perm
from .scalar import Cyclo, embed_cyclo
from .torus import NCTorus, ThetaMatrix

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<mono>m\[\s*sigma\s*=\s*\[(?P<msig>[^\]]*)\]\s*,\s*r\s*=\s*\[(?P<mr>[^\]]*)\]\s*\])
  | (?P<xvec>x\^\[(?P<xv>[^\]]*)\])
  | (?P<ugen>u\[\s*(?P<ui>\d+)\s*,\s*(?P<uk>\d+)\s*\])
  | (?P<pgen>p\[\s*\[?(?P<ps>[^\[\]]*)\]?\s*\])
  | (?P<xgen>x(?P<xi>\d+))
  | (?P<zeta>zeta\(\s*(?P<zn>\d+)\s*\))
  | (?P<num>\d+)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)

MULTI_ATOMS = ("mono", "ugen", "pgen")
TORUS_ATOMS = ("xvec", "xgen")


def _ints(text: str, pos: int) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ExprSyntaxError(f"bad integer list [{text}]", pos) from None


def tokenize(text: str) -> list:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = next(k for k in ("ws", "mono", "xvec", "ugen", "pgen", "xgen", "zeta", "num", "op") if m.group(k))
        if kind != "ws":
            out.append((kind, m, pos))
        pos = m.end()
    # postfix stars: '*' glued to an x/u atom and not followed by an operand
    marked = []
    for idx, (kind, m, p) in enumerate(out):
        if kind == "op" and m.group() == "*" and idx > 0 and out[idx - 1][0] in ("xgen", "ugen"):
            prev_end = out[idx - 1][1].end()
            glued = prev_end == p
            nxt = out[idx + 1] if idx + 1 < len(out) else None
            nxt_glued = nxt is not None and nxt[2] == p + 1
            operand_next = nxt is not None and (nxt[0] != "op" or nxt[1].group() == "(")
            if glued and not (operand_next and nxt_glued):
                marked.append(("star", m, p))
                continue
        marked.append((kind, m, p))
    return marked


def detect_kind(text: str) -> str:
    kinds = {k for k, _, _ in tokenize(text)}
    multi = any(k in kinds for k in MULTI_ATOMS)
    torus = any(k in kinds for k in TORUS_ATOMS)
    if multi and torus:
        raise ExprSyntaxError("expression mixes torus atoms (x) with multitorus atoms (u, p, m)", 0)
    return "multi" if multi else "torus" if torus else "scalar"


class _Parser:
    def __init__(self, text: str, algebra, N: int):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.alg = algebra
        self.N = N

    # ---- token helpers

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def pos(self) -> int:
        t = self.peek()
        return t[2] if t else len(self.text)

    def is_op(self, ch: str) -> bool:
        t = self.peek()
        return t is not None and t[0] == "op" and t[1].group() == ch

    def expect(self, ch: str):
        if not self.is_op(ch):
            raise ExprSyntaxError(f"expected {ch!r}", self.pos())
        self.i += 1

    # ---- values are Cyclo (scalars) or AlgebraElement

    def add(self, a, b):
        if isinstance(a, Cyclo) and isinstance(b, Cyclo):
            return a + b
        if isinstance(a, Cyclo):
            a = self.alg.one().scale(a)
        if isinstance(b, Cyclo):
            b = self.alg.one().scale(b)
        return a + b

    def mul(self, a, b):
        if isinstance(a, Cyclo) and isinstance(b, Cyclo):
            return a * b
        if isinstance(a, Cyclo):
            return b.scale(a)
        if isinstance(b, Cyclo):
            return a.scale(b)
        return a * b

    # ---- grammar

    def parse(self):
        if not self.toks:
            raise ExprSyntaxError("empty expression", 0)
        val = self.expr()
        if self.peek() is not None:
            raise ExprSyntaxError(f"unexpected {self.peek()[1].group()!r}", self.pos())
        return val

    def expr(self):
        neg = False
        if self.is_op("-"):
            self.i += 1
            neg = True
        elif self.is_op("+"):
            self.i += 1
        val = self.term()
        if neg:
            val = self.mul(Cyclo.from_rational(self.N, -1), val)
        while self.is_op("+") or self.is_op("-"):
            sign = self.peek()[1].group()
            self.i += 1
            rhs = self.term()
            if sign == "-":
                rhs = self.mul(Cyclo.from_rational(self.N, -1), rhs)
            val = self.add(val, rhs)
        return val

    def _starts_operand(self) -> bool:
        t = self.peek()
        if t is None:
            return False
        return t[0] not in ("op", "star") or t[1].group() == "("

    def term(self):
        val = self.power()
        while True:
            if self.is_op("*"):
                self.i += 1
                val = self.mul(val, self.power())
            elif self._starts_operand():
                val = self.mul(val, self.power())
            else:
                return val

    def power(self):
        base = self.primary()
        if self.is_op("^"):
            self.i += 1
            neg = False
            if self.is_op("-"):
                self.i += 1
                neg = True
            t = self.peek()
            if t is None or t[0] != "num":
                raise ExprSyntaxError("expected an integer exponent", self.pos())
            self.i += 1
            k = int(t[1].group())
            k = -k if neg else k
            if isinstance(base, Cyclo):
                return base ** k
            if k < 0:
                raise ExprSyntaxError("negative powers are only defined for scalars", t[2])
            return base ** k
        return base

    def primary(self):
        t = self.peek()
        if t is None:
            raise ExprSyntaxError("unexpected end of expression", len(self.text))
        kind, m, p = t
        self.i += 1
        if kind == "op" and m.group() == "(":
            val = self.expr()
            self.expect(")")
            return val
        if kind == "num":
            q = Fraction(int(m.group()))
            if self.is_op("/"):
                self.i += 1
                d = self.peek()
                if d is None or d[0] != "num":
                    raise ExprSyntaxError("expected a denominator", self.pos())
                self.i += 1
                if int(d[1].group()) == 0:
                    raise ExprSyntaxError("zero denominator", d[2])
                q /= int(d[1].group())
            return Cyclo.from_rational(self.N, q)
        if kind == "zeta":
            order = int(m.group("zn"))
            if order <= 0:
                raise ExprSyntaxError("zeta order must be positive", p)
            return embed_cyclo(Cyclo.root(order, 1 % order), self.N)
        if kind == "op":
            raise ExprSyntaxError(f"unexpected {m.group()!r}", p)
        if kind == "star":
            raise ExprSyntaxError("stray '*'", p)
        val = self.atom(kind, m, p)
        if self.peek() is not None and self.peek()[0] == "star":
            self.i += 1
            val = val.star()
        return val

    def atom(self, kind, m, p):
        A = self.alg
        if kind == "xgen":
            i = int(m.group("xi"))
            if isinstance(A, QuantumMultitorus):
                raise ExprSyntaxError("x_i atoms belong to the torus", p)
            return A.gen(i)
        if kind == "xvec":
            return A.monomial(_ints(m.group("xv"), p))
        if kind == "ugen":
            return A.u_gen(int(m.group("ui")), int(m.group("uk")))
        if kind == "pgen":
            return A.p_sigma(self._perm(m.group("ps"), p))
        if kind == "mono":
            return A.monomial(self._perm(m.group("msig"), p), _ints(m.group("mr"), p))
        raise ExprSyntaxError(f"unknown atom {m.group()!r}", p)

    def _perm(self, text, p) -> Perm:
        try:
            return Perm(_ints(text, p))
        except ValueError as exc:
            raise ExprSyntaxError(str(exc), p) from None


def parse_scalar(text: str, N: int) -> Cyclo:
    val = _Parser(text, None, N).parse()
    if not isinstance(val, Cyclo):
        raise ExprSyntaxError("expected a scalar", 0)
    return val


def parse_element(text: str, theta: ThetaMatrix, N: int | None = None, kind: str | None = None) -> AlgebraElement:
    """Parse into the torus or the multitorus; the algebra is inferred from the atoms unless
    ``kind`` ("torus" / "multi") is given.  Pure scalars land in the torus."""
    N = theta.conductor() if N is None else N
    found = detect_kind(text)
    kind = kind or ("torus" if found == "scalar" else found)
    if found not in ("scalar", kind):
        raise ExprSyntaxError(f"expression uses {found} atoms but a {kind} element was requested", 0)
    alg = QuantumMultitorus(theta, N) if kind == "multi" else NCTorus(theta, N)
    val = _Parser(text, alg, N).parse()
    if isinstance(val, Cyclo):
        val = alg.one().scale(val)
    return val
