from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twistrep.analysis import (
    CapExceeded,
    DegenerateForm,
    check_relations,
    element_order,
    enumerate_group,
    invariant_hermitian_forms,
    signature,
)
from twistrep.linalg import nullspace, rank
from twistrep.matrices import ScaledMatrix, identity, mat_eq, mat_mul
from twistrep.presentations import presentation_catalog
from twistrep.reps import MatRep, SpGenerator, burau_reduced, jones_b6, weil_generator, weil_rep


from conftest import C10, L, cyc10


def _verdicts(report):
    return {r["relator"]: r["verdict"] for r in report["relators"]}


def test_jones_symbolic_b6_exact():
    assert check_relations(jones_b6(), presentation_catalog("B6"), "exact")["passed"]


def test_jones_phi10_gamma06_projective():
    rep = jones_b6().change_ring(C10)
    assert check_relations(rep, presentation_catalog("Gamma06"), "projective")["passed"]


def test_jones_symbolic_h6_is_q4_not_identity():
    # J(h6) = q^4 I already over Z[q, q^-1]: scalar, but not the identity
    pres = presentation_catalog("Gamma06")
    proj = check_relations(jones_b6(), pres, "projective")
    row = next(r for r in proj["relators"] if r["relator"] == "h6")
    assert row["verdict"] == "pass" and row["scalar"] == "q^4"
    exact = _verdicts(check_relations(jones_b6(), pres, "exact"))
    assert exact["h6"] == "fail"
    assert exact["(b1b2b3b4b5)^6"] == "fail"


def test_auto_mode_uses_hints():
    rep = jones_b6().change_ring(C10)
    res = check_relations(rep, presentation_catalog("Gamma06"), "auto")
    assert {r["mode"] for r in res["relators"]} == {"exact", "projective"}


def test_missing_generator():
    with pytest.raises(KeyError):
        check_relations(burau_reduced(4), presentation_catalog("B6"))


def test_element_orders():
    assert element_order(identity(3, C10)) == 1
    j = jones_b6().change_ring(C10)
    assert element_order(j.images["b1"], "projective") == 5
    s = weil_generator(1, 2, SpGenerator.fourier())
    assert 4 % element_order(s, "projective") == 0
    with pytest.raises(CapExceeded):
        element_order(ScaledMatrix([[L.gen()]], L), cap=20)


def test_enumerate_minus_identity():
    res = enumerate_group([identity(2, C10) * -1])
    assert (res.linear_order, res.projective_order) == (2, 1)


def test_enumerate_weil_k2_divides_sp2_z4():
    rep = weil_rep(1, 2)
    res = enumerate_group(list(rep.images.values()))
    assert 48 % res.projective_order == 0


def test_enumerate_b3_burau_at_tenth_root():
    rep = burau_reduced(3, convention="hecke").change_ring(C10)
    res = enumerate_group(list(rep.images.values()))
    assert res.generator_projective_orders == [5, 5]
    assert res.linear_order == res.scalar_order * res.projective_order
    assert (res.linear_order, res.scalar_order, res.projective_order) == (600, 10, 60)


def test_enumerate_parallel_matches_serial():
    rep = burau_reduced(3, convention="hecke").change_ring(C10)
    a = enumerate_group(list(rep.images.values()), jobs=1)
    b = enumerate_group(list(rep.images.values()), jobs=2)
    assert a.to_json() == b.to_json()


def test_enumerate_cap():
    rep = burau_reduced(3, convention="hecke").change_ring(C10)
    with pytest.raises(CapExceeded):
        enumerate_group(list(rep.images.values()), cap=50)


def test_cap_from_environment(monkeypatch):
    from twistrep.analysis import default_cap

    monkeypatch.setenv("TWISTREP_CAP", "123")
    assert default_cap() == 123


# ---------------------------------------------------------------------------
# invariant forms


def _invariant(rep, form):
    return all(
        mat_eq(mat_mul(mat_mul(rep.images[g].dagger(), form.matrix), rep.images[g]), form.matrix)
        for g in rep.generators
    )


def test_trivial_rep_has_one_form():
    one = identity(1, C10)
    rep = MatRep("free(1)", C10, ("x1",), {"x1": one}, {"x1": one})
    forms = invariant_hermitian_forms(rep)
    assert len(forms) == 1
    assert signature(forms[0], Fraction(1, 10))["signature"] == [1, 0]


def test_burau_b4_form_unique_and_invariant():
    rep = burau_reduced(4).change_ring(C10)
    forms = invariant_hermitian_forms(rep)
    assert len(forms) == 1 and _invariant(rep, forms[0])


def test_jones_form_unique_and_invariant():
    rep = jones_b6().change_ring(C10)
    forms = invariant_hermitian_forms(rep)
    assert len(forms) == 1 and _invariant(rep, forms[0])


def test_weil_preserves_standard_form():
    rep = weil_rep(1, 3)
    forms = invariant_hermitian_forms(rep)
    assert len(forms) == 1
    s = signature(forms[0], Fraction(1, 6))
    assert s["signature"] == [3, 0]


def test_signature_is_galois_covariant():
    rep = burau_reduced(4).change_ring(C10)
    h = invariant_hermitian_forms(rep)[0].matrix
    for a in (1, 3, 7, 9):
        s = signature(h, Fraction(a, 10))
        # conjugate embeddings give the same Hermitian matrix up to transpose
        t = signature(h, Fraction(10 - a, 10))
        assert s["up_to_sign"] == t["up_to_sign"]


def test_degenerate_form():
    h = ScaledMatrix([[1, 0], [0, 0]], C10)
    with pytest.raises(DegenerateForm):
        signature(h, Fraction(1, 10))


# ---------------------------------------------------------------------------
# linear algebra


@given(st.lists(st.lists(cyc10, min_size=4, max_size=4), min_size=1, max_size=3))
def test_nullspace_vectors_are_solutions(rows):
    basis = nullspace(rows, 4, C10.zero())
    assert len(basis) == 4 - rank(rows)
    for v in basis:
        for r in rows:
            assert sum((a * b for a, b in zip(r, v)), C10.zero()).is_zero()


def test_rank_of_dependent_rows():
    z = C10.gen()
    r1 = [C10(1), z, z * z]
    r2 = [z, z * z, z ** 3]
    assert rank([r1, r2]) == 1
