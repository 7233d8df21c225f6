from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import pall, pcompose, pinverse
from qtorus.perms import (
    Perm,
    act,
    all_perms,
    orbit_representative,
    right_cosets,
    stabilizer,
    symmetric_group,
    trivial_subgroup,
)

E3 = Perm.identity(3)
C3 = Perm([2, 3, 1])  # 1 -> 2 -> 3 -> 1
S12 = Perm([2, 1, 3])


def test_compose_examples():
    assert Perm.identity(2) * Perm([2, 1]) == Perm([2, 1])
    assert Perm([2, 1]) * Perm([2, 1]) == Perm.identity(2)
    assert C3 * S12 == Perm([3, 2, 1])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_group_law_against_tuples(n):
    for a, b in itertools.product(pall(n), repeat=2):
        assert tuple(Perm(a) * Perm(b)) == pcompose(a, b)
    for a in pall(n):
        assert tuple(Perm(a).inverse()) == pinverse(a)
    assert len(all_perms(n)) == len(pall(n))


def test_action_examples():
    assert act(E3, (1, 2, 3)) == (1, 2, 3)
    assert act(Perm([2, 1]), (1, 0)) == (0, 1)
    assert act(C3, (5, 0, -1)) == (-1, 5, 0)


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_action_is_left_action(r):
    for a, b in itertools.product(all_perms(3), repeat=2):
        assert act(a * b, r) == act(a, act(b, r))


def test_stabilizers():
    assert stabilizer((1, 1)).order == 2
    assert stabilizer((1, 0)).order == 1
    h = stabilizer((2, 2, 5))
    assert h.order == 2 and S12 in h and C3 not in h


def test_orbit_representative():
    assert orbit_representative((0, 1)) == (1, 0)
    assert orbit_representative((1, 0)) == (1, 0)
    assert orbit_representative((-1, 3, 0)) == (3, 0, -1)


def test_cosets():
    assert len(right_cosets(symmetric_group(2))) == 1
    dec = right_cosets(trivial_subgroup(2))
    assert len(dec) == 2 and set(dec.reps) == set(all_perms(2))
    dec = right_cosets(stabilizer((2, 2, 5)))
    assert len(dec) == 3
    seen = [s for nu in range(len(dec)) for s in dec.coset(nu)]
    assert sorted(seen) == sorted(all_perms(3))


def test_bad_perm():
    with pytest.raises(ValueError):
        Perm([1, 1])


def test_sign():
    assert Perm([2, 1, 3]).sign() == -1
    assert C3.sign() == 1
