from __future__ import annotations

import random

import pytest
from hypothesis import given

from twistrep import _conventions
from twistrep.fox import (
    CONVENTIONS,
    NotStabilizing,
    default_selection_samples,
    fox_derivative,
    fox_jacobian,
    free_rep,
    group_ring_identity_holds,
    kernel_automorphisms,
    magnus_rep,
    regular_rep,
    select_magnus_convention,
)
from twistrep.matrices import ScaledMatrix, identity, mat_eq, mat_mul
from twistrep.rings import FreeGroup, GroupRing, GroupRingElt
from twistrep.suite import random_stabilizing_pairs
from twistrep.words import BraidWord, FreeAuto, artin_action, reduce_letters

from conftest import L, free_words

ZF2 = GroupRing(FreeGroup(2))


def g(*letters):
    return ZF2.element(tuple(letters))


def test_derivative_of_generators():
    for i in (1, 2):
        for j in (1, 2):
            expected = ZF2.one() if i == j else ZF2.zero()
            assert fox_derivative((j,), i, 2) == expected


def test_product_and_inverse_rules():
    assert fox_derivative((1, 2), 1, 2) == ZF2.one()
    assert fox_derivative((-1,), 1, 2) == -g(-1)


def test_jacobian_of_sigma1():
    jac = fox_jacobian(artin_action(BraidWord(2, (1,))))
    assert jac.entries[0] == (ZF2.one() - g(1, 2, -1), ZF2.one())
    assert jac.entries[1] == (g(1), ZF2.zero())


@given(free_words(3, 30))
def test_fundamental_identity(w):
    assert group_ring_identity_holds(reduce_letters(w), 3)


@given(free_words(2, 10), free_words(2, 10))
def test_derivative_product_rule(u, v):
    u, v = reduce_letters(u), reduce_letters(v)
    uv = reduce_letters(u + v)
    for i in (1, 2):
        lhs = fox_derivative(uv, i, 2)
        rhs = fox_derivative(u, i, 2) + g(*u) * fox_derivative(v, i, 2)
        assert lhs == rhs


def test_identity_automorphism_gives_identity():
    rho, _ = kernel_automorphisms()
    assert mat_eq(magnus_rep(FreeAuto.identity(2), rho), identity(12, L))


def test_non_stabilizing_rejected():
    rho, _ = kernel_automorphisms()
    swap = FreeAuto(2, ((2,), (1,)), ((2,), (1,)))
    with pytest.raises(NotStabilizing):
        magnus_rep(swap, rho)


def test_regular_rep_of_s3():
    rho = regular_rep([(1, 0, 2), (1, 2, 0)])
    assert rho.dim == 6
    x1 = rho.images["x1"]
    assert mat_eq(mat_mul(x1, x1), identity(6, L))


def test_frozen_magnus_convention_is_the_unique_multiplicative_one():
    good = select_magnus_convention(default_selection_samples())
    assert good == [(_conventions.MAGNUS_BAR, _conventions.MAGNUS_ROWS)]
    assert len(CONVENTIONS) == 4


def test_magnus_multiplicative_on_random_pairs():
    rho, pairs = random_stabilizing_pairs(10, random.Random(3))
    for phi, psi in pairs:
        assert mat_eq(magnus_rep(phi * psi, rho), mat_mul(magnus_rep(phi, rho), magnus_rep(psi, rho)))


def test_braid_magnus_with_abelian_rho_is_multiplicative():
    # rho(x_i) = t for all i is preserved by every braid automorphism
    t = ScaledMatrix([[L.gen()]], L)
    rho = free_rep([t, t, t])
    a = artin_action(BraidWord(3, (1,)))
    b = artin_action(BraidWord(3, (2, -1)))
    assert mat_eq(magnus_rep(a * b, rho), mat_mul(magnus_rep(a, rho), magnus_rep(b, rho)))


def test_group_ring_elements_print():
    assert isinstance(fox_derivative((1, 2, -1), 1, 2), GroupRingElt)
