from __future__ import annotations

import pytest
from hypothesis import given

from twistrep.presentations import delta6, full_twist6, h6
from twistrep.words import (
    BraidWord,
    FreeAuto,
    WordLengthExceeded,
    artin_action,
    braid_eq,
    commutator,
    reduce_letters,
    substitute,
    word,
    word_conj,
    word_inv,
    word_mul,
    word_pow,
)

from conftest import braid_letters, free_words


def test_basic_word_ops():
    assert word_mul((1,), (-1,)) == ()
    assert word_inv((1, 2)) == (-2, -1)
    assert word_conj((1,), (2,)) == (2, 1, -2)
    assert commutator((1,), (2,)) == (1, 2, -1, -2)
    assert word_pow((1, 2), -2) == (-2, -1, -2, -1)
    assert word(1, 2, -2, 3) == (1, 3)


def test_zero_letter_rejected():
    with pytest.raises(ValueError):
        reduce_letters((1, 0))


@given(free_words(3), free_words(3), free_words(3))
def test_free_group_axioms(u, v, w):
    u, v, w = reduce_letters(u), reduce_letters(v), reduce_letters(w)
    assert word_mul(word_mul(u, v), w) == word_mul(u, word_mul(v, w))
    assert word_mul(u, word_inv(u)) == ()
    assert word_inv(word_mul(u, v)) == word_mul(word_inv(v), word_inv(u))


def test_artin_sigma1():
    phi = artin_action(BraidWord(2, (1,)))
    assert phi((1,)) == (1, 2, -1)
    assert phi((2,)) == (1,)


def test_artin_braid_relation_same_automorphism():
    a = artin_action(BraidWord(3, (1, 2, 1)))
    b = artin_action(BraidWord(3, (2, 1, 2)))
    assert a.images == b.images


def test_full_twist_is_inner():
    phi = artin_action(BraidWord(3, (1, 2) * 3))
    assert phi.images == FreeAuto.inner(3, (1, 2, 3)).images


@given(braid_letters(4), braid_letters(4))
def test_artin_is_homomorphism(u, v):
    U, V = BraidWord(4, u), BraidWord(4, v)
    assert artin_action(U * V).images == (artin_action(U) * artin_action(V)).images


@given(braid_letters(4))
def test_artin_inverse(u):
    U = BraidWord(4, u)
    assert (artin_action(U) * artin_action(U.inverse())).is_identity()


@given(free_words(3), braid_letters(3))
def test_artin_fixes_boundary_word(w, b):
    # x1 x2 x3 is fixed by every braid automorphism
    phi = artin_action(BraidWord(3, b))
    assert phi((1, 2, 3)) == (1, 2, 3)


def test_braid_eq_examples():
    assert braid_eq(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
    assert braid_eq(BraidWord(4, (1, 3)), BraidWord(4, (3, 1)))
    assert not braid_eq(BraidWord(3, (1, 2)), BraidWord(3, (2, 1)))
    assert braid_eq(BraidWord(6, full_twist6()), BraidWord(6, h6() + (4, 3, 2, 1) * 5))
    assert braid_eq(BraidWord(6, full_twist6()), BraidWord(6, delta6() * 6))


def test_braidword_validates_indices():
    with pytest.raises(ValueError):
        BraidWord(3, (3,))


def test_free_auto_checks_inverse():
    with pytest.raises(ValueError):
        FreeAuto(2, ((1, 2), (2,)), ((1,), (2,)))
    t = FreeAuto.transvection(2, 1, (2,))
    assert (t * t.inverse()).is_identity()
    with pytest.raises(ValueError):
        FreeAuto.transvection(2, 1, (1, 2))


@given(free_words(2, 5), free_words(2, 5))
def test_automorphism_composition_acts_on_words(u, w):
    t = FreeAuto.inner(2, reduce_letters(u))
    s = FreeAuto.transvection(2, 2, (1, 1))
    w = reduce_letters(w)
    assert (t * s)(w) == t(s(w))


def test_length_cap():
    with pytest.raises(WordLengthExceeded):
        substitute((1,) * 10, [(1, 2, 1, 2), (2,)], cap=20)
