from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from qtorus.algebra import expand_slot, tensor
from qtorus.errors import ThetaMismatch
from qtorus.haar import alpha, check_coaction, check_haar_invariance, haar, haar_key
from qtorus.multitorus import QuantumMultitorus
from qtorus.perms import Perm
from qtorus.sampling import random_pairs
from qtorus.torus import NCTorus, ThetaMatrix, filtration_index, trace_phi

TH2 = ThetaMatrix.from_upper(2, {(1, 2): Fraction(1, 3)})
TH3 = ThetaMatrix.from_upper(3, {(1, 2): Fraction(1, 3), (1, 3): Fraction(1, 4), (2, 3): Fraction(-1, 6)})


@pytest.fixture(scope="module")
def A2():
    return QuantumMultitorus(TH2)


def test_haar_values(A2):
    A3 = QuantumMultitorus(TH3, 12)
    assert haar(A2.one()) == 1
    for s in A3.perms:
        assert haar(A3.p_sigma(s)) == Fraction(1, 6)
        assert haar(A3.monomial(s, (1, 0, 0))) == 0
    assert haar(A2.p_sigma(Perm([2, 1]))) == Fraction(1, 2)


def test_haar_on_a_star_a(A2):
    a = A2.x_gen(Perm([1, 2]), 1) + A2.x_gen(Perm([2, 1]), 1)
    assert haar(a.star() * a) == 1


def test_invariance_on_projections(A2):
    for s in A2.perms:
        d = A2.delta_monomial((s, (0, 0)))
        left = expand_slot(d, 1, lambda k: haar_key(A2, k), A2)
        assert left == A2.one().scale(Fraction(1, 2))


@pytest.mark.parametrize("theta,N", [(TH2, None), (TH3, 12)])
def test_haar_suite(theta, N):
    A = QuantumMultitorus(theta, N)
    bound = 2 if theta.n == 2 else 1
    rep = check_haar_invariance(A, bound, random_pairs(A, 20, seed=2, bound=2))
    assert rep.passed, rep.failures()[:3]


def test_alpha_examples(A2):
    T = NCTorus(TH2)
    U = A2.u_matrix()
    assert alpha(T.one(), A2) == tensor(T.one(), A2.one())
    for k in (1, 2):
        want = tensor(T.gen(1), U[0][k - 1]) + tensor(T.gen(2), U[1][k - 1])
        assert alpha(T.gen(k), A2) == want
    x1 = T.gen(1)
    assert alpha(x1 * x1.star(), A2) == tensor(T.one(), A2.one())


def test_podles_identity(A2):
    T = NCTorus(TH2)
    U = A2.u_matrix()
    for k in (1, 2):
        got = sum((alpha(T.gen(i), A2) * tensor(T.one(), U[k - 1][i - 1].star()) for i in (1, 2)),
                  tensor(T.zero(), A2.zero()))
        assert got == tensor(T.gen(k), A2.one())


def test_degree_transport(A2):
    T = NCTorus(TH2)
    a = alpha(T.gen(1) * T.gen(2).star(), A2)
    for (r, _), _c in a.terms.items():
        assert filtration_index(r) == filtration_index((1, -1))
    for (r, _), _c in alpha(T.monomial((1, 1)), A2).terms.items():
        assert sorted(r) == [1, 1] and sum(x * x for x in r) == 2


def test_trace_invariance(A2):
    T = NCTorus(TH2)
    for r in itertools.product((-1, 0, 1, 2), repeat=2):
        got = expand_slot(alpha(T.monomial(r), A2), 1, lambda k: haar_key(A2, k), T)
        assert got == T.one().scale(trace_phi(T.monomial(r)))


def test_theta_mismatch(A2):
    other = NCTorus(ThetaMatrix.from_upper(2, {(1, 2): Fraction(1, 4)}))
    with pytest.raises(ThetaMismatch):
        alpha(other.gen(1), A2)


@pytest.mark.parametrize("theta,N", [(TH2, None), (TH3, 12)])
def test_coaction_suite(theta, N):
    rep = check_coaction(QuantumMultitorus(theta, N), 2 if theta.n == 2 else 1)
    assert rep.passed, rep.failures()[:3]
