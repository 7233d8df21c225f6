from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtorus.errors import ConductorMismatch, ExprSyntaxError, IndexOutOfRange
from qtorus.multitorus import QuantumMultitorus
from qtorus.parser import detect_kind, parse_element, parse_scalar
from qtorus.perms import Perm
from qtorus.sampling import random_element
from qtorus.scalar import Cyclo
from qtorus.torus import NCTorus, ThetaMatrix

TH2 = ThetaMatrix.from_upper(2, {(1, 2): Fraction(1, 3)})
TH3 = ThetaMatrix.from_upper(3, {(1, 2): Fraction(1, 3), (1, 3): Fraction(1, 4), (2, 3): Fraction(-1, 6)})


def test_examples():
    T = NCTorus(TH2)
    A = QuantumMultitorus(TH2)
    assert parse_element("x1 * x1*", TH2) == T.one()
    assert parse_element("u[1,2]", TH2) == A.u_gen(1, 2)
    want = T.monomial((1, -1), Cyclo.root(3, 1) * Fraction(1, 2))
    assert parse_element("1/2 * zeta(3)^1 * x^[1,-1]", TH2) == want


def test_star_and_product():
    T = NCTorus(TH2)
    x1, x2 = T.gen(1), T.gen(2)
    assert parse_element("x1*x2", TH2) == x1 * x2
    assert parse_element("x1* x2", TH2) == x1.star() * x2
    assert parse_element("x2 x1", TH2) == x2 * x1
    assert parse_element("(x1 + x2)^2", TH2) == (x1 + x2) * (x1 + x2)
    assert parse_element("-x1 + 2", TH2) == T.one().scale(2) - x1


def test_multitorus_atoms():
    A = QuantumMultitorus(TH3, 12)
    s = Perm([2, 3, 1])
    assert parse_element("p[[2,3,1]]", TH3, 12) == A.p_sigma(s)
    assert parse_element("m[sigma=[2,3,1], r=[1,0,-2]]", TH3, 12) == A.monomial(s, (1, 0, -2))
    assert parse_element("u[1,3]* u[1,3]", TH3, 12) == A.u_gen(1, 3).star() * A.u_gen(1, 3)


def test_scalars():
    assert parse_scalar("zeta(4)^2", 4) == -1
    assert parse_scalar("1/2 + 1/3", 6) == Fraction(5, 6)
    assert parse_scalar("zeta(3)^-1", 3) == Cyclo.root(3, 2)


@pytest.mark.parametrize("text,pos", [("x1 +", 4), ("x1 ) ", 3), ("1/0", 2), ("x1 # x2", 3)])
def test_syntax_errors(text, pos):
    with pytest.raises(ExprSyntaxError) as exc:
        parse_element(text, TH2)
    assert exc.value.pos == pos


def test_other_errors():
    with pytest.raises(IndexOutOfRange):
        parse_element("x3", TH2)
    with pytest.raises(IndexOutOfRange):
        parse_element("u[1,3]", TH2)
    with pytest.raises(ConductorMismatch):
        parse_element("zeta(5) * x1", TH3, 12)
    with pytest.raises(ExprSyntaxError):
        parse_element("x1 u[1,1]", TH2)


def test_detect_kind():
    assert detect_kind("1/2") == "scalar"
    assert detect_kind("x1 x2*") == "torus"
    assert detect_kind("p[[1,2]]") == "multi"


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from(["torus", "multi"]), st.sampled_from([(TH2, 3), (TH3, 12)]))
def test_round_trip(seed, kind, th):
    theta, N = th
    alg = NCTorus(theta, N) if kind == "torus" else QuantumMultitorus(theta, N)
    a = random_element(alg, random.Random(seed), terms=4, bound=2)
    assert parse_element(str(a), theta, N, kind) == a
