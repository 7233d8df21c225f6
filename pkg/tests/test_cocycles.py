from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from qtorus.algebra import tensor
from qtorus.cocycles import CocycleTable, check_cocycles, chi_character, phi, theta_cocycle
from qtorus.errors import NotInStabilizer
from qtorus.multitorus import QuantumMultitorus, delta_H, psi_tilde
from qtorus.perms import Perm, all_perms, stabilizer
from qtorus.scalar import Phase
from qtorus.suites import COCYCLE_VECTORS
from qtorus.torus import ThetaMatrix

TH2 = ThetaMatrix.from_upper(2, {(1, 2): Fraction(1, 3)})
TH3 = ThetaMatrix.from_upper(3, {(1, 2): Fraction(1, 3), (1, 3): Fraction(1, 4), (2, 3): Fraction(-1, 6)})


def test_trivial_values():
    e = Perm.identity(3)
    for r in COCYCLE_VECTORS[3]:
        for t in all_perms(3):
            assert theta_cocycle(r, TH3, e, t).is_trivial()
            assert psi_tilde(TH3, r, e, t).is_trivial()
        assert phi(r, TH3, e).is_trivial()


def test_single_inversion_n2():
    s = Perm([2, 1])
    for r in itertools.product(range(-2, 3), repeat=2):
        # only the pair (1,2) is inverted; tau = s swaps the omega indices
        assert theta_cocycle(r, TH2, s, s) == Phase(TH2(1, 2) * r[1] * r[0])
        assert theta_cocycle(r, TH2, s, Perm.identity(2)) == Phase(TH2(2, 1) * r[1] * r[0])


def test_phi_requires_stabilizer():
    with pytest.raises(NotInStabilizer):
        phi((1, 0, 0), TH3, Perm([2, 1, 3]))
    with pytest.raises(NotInStabilizer):
        CocycleTable.build((1, 0, 0), TH3).phi(Perm([2, 1, 3]))


def test_chi_examples():
    A = QuantumMultitorus(TH2)
    assert chi_character((0, 0), A) == A.one()
    chi = chi_character((1, 0), A)
    assert chi == A.x_gen(Perm.identity(2), 1)
    for r in ((1, 1), (2, 2), (-1, -1)):
        h = stabilizer(r)
        chi = chi_character(r, A)
        assert len(chi) == 2
        assert delta_H(h, chi) == tensor(chi, chi)


@pytest.mark.parametrize("theta,N", [(TH2, None), (TH3, 12)])
def test_cocycle_suite(theta, N):
    rep = check_cocycles(theta, COCYCLE_VECTORS[theta.n], QuantumMultitorus(theta, N))
    assert rep.passed, rep.failures()[:3]
