from __future__ import annotations

import json

import pytest
from hypothesis import given, strategies as st

from twistrep.matrices import ScaledMatrix, charpoly, identity, mat_eq, mat_mul, mat_pow
from twistrep.presentations import braid_relators
from twistrep.reps import (
    BURAU_B4_DISPLAYED,
    MatRep,
    SpGenerator,
    all_caterpillar_orders,
    burau_reduced,
    burau_unreduced,
    caterpillar,
    count_colorings,
    cw_h1_dim,
    displayed_matrix,
    fib_admissible,
    fibonacci_dim,
    fibonacci_verlinde,
    folding,
    jones_b6,
    necklace,
    weil_basis,
    weil_generator,
    weil_of_word,
    weil_rep,
)
from twistrep.rings import Cyclotomic
from twistrep.suite import r8_scalar
from twistrep.words import BraidWord

from conftest import C10, L, braid_letters

q = L.gen()


# ---------------------------------------------------------------------------
# Burau


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("convention", ["signed", "hecke"])
def test_reduced_burau_braid_relations(n, convention):
    rep = burau_reduced(n, convention=convention)
    one = identity(n - 1, L)
    for _, w in braid_relators(n):
        assert mat_eq(rep.evaluate(w), one)


@pytest.mark.parametrize("n", [3, 4])
def test_unreduced_burau_braid_relations(n):
    rep = burau_unreduced(n)
    for _, w in braid_relators(n):
        assert mat_eq(rep.evaluate(w), identity(n, L))


def test_unreduced_burau_at_one_is_permutation():
    rep = burau_unreduced(3, t=1)
    assert rep.images["b1"].entries == ScaledMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]], L).entries


def test_two_strand_burau_is_q():
    for conv in ("signed", "hecke"):
        assert burau_reduced(2, convention=conv).images["b1"].entries == ((q,),)


def test_reduced_burau_b4_middle_rows():
    b = burau_reduced(4)
    assert [list(r) for r in b.images["b2"].entries][1] == [q, q, L(-1)]
    assert [list(r) for r in b.images["b1"].entries][0] == [q, L(-1), L(0)]


def test_displayed_b4_mismatches_are_exactly_the_known_entries():
    # The displayed b_i have -1 where a representation of B_4 needs +1
    # (and -q for q in b3); they do not satisfy the braid relations.
    b = burau_reduced(4)
    diffs = set()
    for name, rows in BURAU_B4_DISPLAYED.items():
        shown = displayed_matrix(rows, L)
        for i in range(3):
            for j in range(3):
                if shown.entries[i][j] != b.images[name].entries[i][j]:
                    diffs.add((name, i + 1, j + 1))
    assert diffs == {("b1", 2, 2), ("b2", 3, 3), ("b3", 2, 2), ("b3", 3, 2)}


@pytest.mark.parametrize("n", [3, 4])
def test_hecke_burau_quadratic(n):
    rep = burau_reduced(n, convention="hecke")
    for g in rep.generators:
        m = rep.images[g]
        one = identity(n - 1, L)
        assert ((m + one) @ (m - one * q)).is_zero()


# ---------------------------------------------------------------------------
# Jones


def test_jones_displayed_entry_and_charpoly():
    j = jones_b6()
    assert j.images["b2"].entries[2][1] == q
    # (l + 1)^3 (l - q)^2, compared by evaluation at a few integers
    lam_poly = charpoly(j.images["b1"])
    for lam in (-3, -1, 0, 2, 5):
        value = sum((c * lam ** k for k, c in enumerate(lam_poly)), L.zero())
        assert value == (L(lam) + 1) ** 3 * (L(lam) - q) ** 2


def test_jones_hecke_relation():
    j = jones_b6()
    one = identity(5, L)
    for g in j.generators:
        m = j.images[g]
        assert ((m + one) @ (m - one * q)).is_zero()


def test_jones_mod_phi10_is_a_rep():
    j = jones_b6().change_ring(C10)
    assert j.ring == C10
    for _, w in braid_relators(6):
        assert mat_eq(j.evaluate(w), identity(5, C10))


@given(braid_letters(6, 5), braid_letters(6, 5))
def test_jones_is_multiplicative(u, v):
    j = jones_b6()
    assert mat_eq(j.evaluate(u + v), mat_mul(j.evaluate(u), j.evaluate(v)))


def test_folding_examples():
    assert folding(BraidWord(4, (3,))).letters == (1,)
    assert folding(BraidWord(4, (1, -3))).letters == (1, -1)
    assert folding(BraidWord(4, (2, 1, -3, -2))).letters == (2, 1, -1, -2)


def test_matrep_rejects_wrong_inverse():
    m = ScaledMatrix([[q]], L)
    with pytest.raises(ValueError):
        MatRep("free(1)", L, ("x1",), {"x1": m}, {"x1": m})


def test_matrep_json_roundtrip():
    rep = burau_reduced(3).change_ring(C10)
    back = MatRep.from_json(json.loads(json.dumps(rep.to_json())))
    assert back.generators == rep.generators
    assert all(mat_eq(back.images[g], rep.images[g]) for g in rep.generators)


# ---------------------------------------------------------------------------
# Weil


def test_weil_upper_k2():
    m = weil_generator(1, 2, SpGenerator.upper([[1]]))
    i = Cyclotomic(4).gen()
    assert m.entries == ScaledMatrix([[1, 0], [0, i]], Cyclotomic(4)).entries


def test_weil_fourier_k2():
    m = weil_generator(1, 2, SpGenerator.fourier())
    assert m.entries == ScaledMatrix([[1, 1], [1, -1]], Cyclotomic(4)).entries
    assert (m.scale_base, m.scale_exp) == (2, -1)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_weil_linear_one_is_identity(k):
    assert mat_eq(weil_generator(1, k, SpGenerator.linear([[1]])), identity(k, Cyclotomic(2 * k)))


def test_weil_empty_word_and_t_power():
    assert mat_eq(weil_of_word(1, 3, []), identity(3, Cyclotomic(6)))
    t = weil_generator(1, 4, SpGenerator.upper([[1]]))
    assert mat_eq(mat_pow(t, 8), identity(4, Cyclotomic(8)))


def test_weil_s4_scalar_in_r8():
    s = weil_generator(1, 2, SpGenerator.fourier())
    scalar, in_r8 = r8_scalar(mat_pow(s, 4))
    assert scalar is not None and in_r8


def test_weil_basis_order():
    assert weil_basis(2, 2) == [(0, 0), (1, 0), (0, 1), (1, 1)]


def test_weil_generator_validation():
    with pytest.raises(ValueError):
        SpGenerator.upper([[0, 1], [2, 0]])
    with pytest.raises(ValueError):
        SpGenerator.linear([[2]])
    with pytest.raises(ValueError):
        weil_generator(1, 1, SpGenerator.fourier())


@given(st.sampled_from([2, 3, 4]), st.lists(st.sampled_from(["T", "S"]), max_size=6))
def test_weil_images_are_unitary(k, word):
    rep = weil_rep(1, k)
    one = identity(k, rep.ring)
    m = one
    for g in word:
        m = mat_mul(m, rep.images[g])
    assert mat_eq(mat_mul(m, m.dagger()), one)


def test_weil_genus2_generators_unitary():
    rep = weil_rep(2, 2)
    one = identity(4, rep.ring)
    for g in rep.generators:
        assert mat_eq(mat_mul(rep.images[g], rep.images[g].dagger()), one)


# ---------------------------------------------------------------------------
# Fibonacci


def test_admissibility():
    assert fib_admissible(0, 0, 0)
    assert fib_admissible(2, 2, 0) and fib_admissible(2, 2, 2)
    assert not fib_admissible(2, 0, 0)


@pytest.mark.parametrize("g,k,d", [(0, 0, 1), (2, 0, 5), (3, 0, 15), (0, 1, 0), (0, 3, 1), (1, 0, 2)])
def test_fibonacci_dims(g, k, d):
    assert fibonacci_dim(g, k) == d


@pytest.mark.parametrize("g,k", [(g, k) for g in range(4) for k in range(4)])
def test_fibonacci_count_matches_verlinde(g, k):
    assert abs(fibonacci_dim(g, k) - fibonacci_verlinde(g, k)) < 1e-6


@pytest.mark.parametrize("g,k", [(1, 2), (2, 2), (3, 1), (2, 3)])
def test_spines_agree(g, k):
    counts = {count_colorings(caterpillar(g, k, order)) for order in all_caterpillar_orders(g, k)}
    counts.add(count_colorings(necklace(g, k)))
    assert counts == {fibonacci_dim(g, k)}


@pytest.mark.parametrize("g,dim_v,h", [(2, 1, 2), (3, 1, 4), (2, 2, 4)])
def test_cw_h1_dim(g, dim_v, h):
    assert cw_h1_dim(g, dim_v) == h


def test_cw_h1_dim_rejects_low_genus():
    with pytest.raises(ValueError):
        cw_h1_dim(1, 1)


def test_delta6_product_differs_from_display_only_at_1_5():
    from twistrep.reps import jones_delta6_displayed

    prod = jones_b6()((1, 2, 3, 4, 5))
    shown = jones_delta6_displayed()
    diff = [(i + 1, j + 1) for i in range(5) for j in range(5) if prod.entries[i][j] != shown.entries[i][j]]
    assert diff == [(1, 5)]
    assert prod.entries[0][4].is_zero()
