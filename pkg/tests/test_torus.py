from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import oracle_product, oracle_star, small_vectors, theta_from_upper
from qtorus.errors import IndexOutOfRange
from qtorus.scalar import Phase
from qtorus.torus import (
    NCTorus,
    ThetaMatrix,
    degree_decompose,
    filtration_index,
    laplacian,
    torus_action,
    trace_phi,
)

T3 = {(1, 2): Fraction(1, 3), (1, 3): Fraction(1, 4), (2, 3): Fraction(-1, 6)}


def torus(n, upper):
    return NCTorus(ThetaMatrix.from_upper(n, upper))


def phase_coeff(A, q):
    return Phase(q).to_cyclo(A.N)


@pytest.mark.parametrize("n,upper", [(2, {(1, 2): Fraction(1, 3)}), (3, T3)])
def test_mul_star_against_rewriting(n, upper):
    A = torus(n, upper)
    th = theta_from_upper(n, upper)
    vecs = small_vectors(n, 1)
    for r, s in itertools.product(vecs, repeat=2):
        q, t = oracle_product(th, r, s)
        assert A.monomial(r) * A.monomial(s) == A.monomial(t, phase_coeff(A, q))
    for r in small_vectors(n, 2):
        q, t = oracle_star(th, r)
        assert A.monomial(r).star() == A.monomial(t, phase_coeff(A, q))


def test_generator_exchange():
    A = torus(2, {(1, 2): Fraction(1, 3)})
    x1, x2 = A.gen(1), A.gen(2)
    assert x1 * x2 == A.monomial((1, 1))
    w21 = Phase(Fraction(-1, 3)).to_cyclo(A.N)
    assert x2 * x1 == (x1 * x2).scale(w21)


def test_unit_and_star_examples():
    A = torus(3, T3)
    x1 = A.gen(1)
    assert A.one() * x1 == x1
    assert x1 * x1.star() == A.one()
    assert A.one().star() == A.one()
    assert x1.star() == A.monomial((-1, 0, 0))


def test_square_difference():
    A = torus(2, {(1, 2): Fraction(1, 3)})
    x1, x2 = A.gen(1), A.gen(2)
    got = (x1 + x2) * (x1 - x2)
    # x2 x1 - x1 x2 = (w21 - 1) x1 x2
    w21 = Phase(Fraction(-1, 3)).to_cyclo(A.N)
    assert got == A.monomial((2, 0)) - A.monomial((0, 2)) + A.monomial((1, 1), w21 - 1)
    B = torus(2, {})
    y1, y2 = B.gen(1), B.gen(2)
    assert (y1 + y2) * (y1 - y2) == B.monomial((2, 0)) - B.monomial((0, 2))


def test_trace_and_decompose():
    A = torus(2, {(1, 2): Fraction(1, 3)})
    x1, x2 = A.gen(1), A.gen(2)
    assert trace_phi(A.one()) == 1
    assert trace_phi(x1) == 0
    assert trace_phi(x1 * x1.star()) == 1
    assert degree_decompose(x1 + x2) == {(1, 0): 1, (0, 1): 1}
    assert degree_decompose(x1 * x2.star()) == {(1, -1): 1}


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_trace_is_tracial_and_faithful(data):
    A = torus(3, T3)
    def elt():
        keys = data.draw(st.lists(st.tuples(*[st.integers(-2, 2)] * 3), min_size=1, max_size=3))
        return sum((A.monomial(k, data.draw(st.integers(-3, 3))) for k in keys), A.zero())
    a, b = elt(), elt()
    assert trace_phi(a * b) == trace_phi(b * a)
    n = trace_phi(a.star() * a)
    assert (n == 0) == (not a)
    assert n.to_complex().real >= 0


def test_filtration_and_laplacian():
    assert filtration_index((0, 0)) == filtration_index((0, 0, 0)) and filtration_index((0,)).p == 0
    assert (filtration_index((1, 0)).p, filtration_index((1, 0)).q) == (1, 0)
    f = filtration_index((2, -1, 0))
    assert (f.p, f.q) == (2, 1)
    A = torus(2, {(1, 2): Fraction(1, 3)})
    assert laplacian(A.one()) == A.zero()
    assert laplacian(A.gen(1)) == -A.gen(1)
    assert laplacian(A.monomial((1, -1))) == A.monomial((1, -1), -2)


def test_torus_action_is_automorphism():
    A = torus(2, {(1, 2): Fraction(1, 3)})
    t = (Phase(Fraction(1, 3)), Phase(Fraction(2, 3)))
    a, b = A.gen(1) + A.monomial((1, 2)), A.gen(2).star()
    assert torus_action(a * b, t) == torus_action(a, t) * torus_action(b, t)


def test_theta_validation():
    with pytest.raises(IndexOutOfRange):
        ThetaMatrix.from_upper(2, {(1, 3): Fraction(1, 2)})
    with pytest.raises(ValueError):
        ThetaMatrix(2, ((0, Fraction(1, 2)), (Fraction(1, 2), 0)))
