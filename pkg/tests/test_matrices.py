from __future__ import annotations

import pytest
from hypothesis import assume, given, strategies as st

from twistrep.matrices import (
    DimensionMismatch,
    ScaledMatrix,
    charpoly,
    identity,
    is_scalar,
    mat_eq,
    mat_inverse,
    mat_mul,
    mat_pow,
    matrix_from_json,
    matrix_to_json,
    proj_eq,
    scalar_value,
)
from twistrep.reps import jones_b6
from twistrep.presentations import h6
from twistrep.rings import Cyclotomic

from conftest import C10, L, cyc10, laurent_polys

q = L.gen()

mats2 = st.lists(laurent_polys, min_size=4, max_size=4).map(lambda e: ScaledMatrix([e[:2], e[2:]], L))


def test_identity_is_neutral():
    m = ScaledMatrix([[q, 1], [0, -1]], L)
    assert mat_eq(mat_mul(identity(2, L), m), m)


def test_is_scalar():
    assert is_scalar(ScaledMatrix([[q, 0], [0, q]], L)) == q
    assert is_scalar(jones_b6().images["b1"]) is None


def test_proj_eq_examples():
    m = ScaledMatrix([[q, 1], [0, -1]], L)
    assert proj_eq(m, m * q)
    assert not proj_eq(identity(2, L), m)


def test_hyperelliptic_image_is_projectively_trivial_at_tenth_root():
    rep = jones_b6().change_ring(C10)
    assert proj_eq(rep.evaluate(h6()), identity(5, C10))


def test_non_square_rejected():
    with pytest.raises(DimensionMismatch):
        ScaledMatrix([[1, 2]], L)


@given(mats2, mats2, mats2)
def test_multiplication_associative(a, b, c):
    assert mat_eq(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c)))


@given(mats2, mats2)
def test_dagger_reverses_products(a, b):
    assert mat_eq(mat_mul(a, b).dagger(), mat_mul(b.dagger(), a.dagger()))


@given(cyc10, cyc10, st.integers(0, 9))
def test_inverse_of_unit_determinant(a, b, k):
    z = C10.gen()
    m = mat_mul(ScaledMatrix([[1, a], [0, 1]], C10), ScaledMatrix([[z ** k, 0], [b, 1]], C10))
    assert mat_eq(mat_mul(m, mat_inverse(m)), identity(2, C10))


@given(laurent_polys, laurent_polys)
def test_upper_triangular_inverse(a, b):
    m = ScaledMatrix([[q, a], [0, -q ** 3]], L)
    assert mat_eq(mat_mul(mat_inverse(m), m), identity(2, L))


@given(mats2)
def test_cayley_hamilton(m):
    c = charpoly(m)
    acc = identity(2, L) * c[0] + m * c[1] + mat_mul(m, m) * c[2]
    assert acc.is_zero()


def test_scale_factor_arithmetic():
    z = Cyclotomic(8)
    s = ScaledMatrix([[1, 1], [1, -1]], z, 2, -1)  # 2^(-1/2) [[1,1],[1,-1]]
    assert mat_eq(mat_mul(s, s), identity(2, z))
    assert scalar_value(mat_pow(s, 2))[0] == z.one()


@given(laurent_polys, st.integers(-3, 3))
def test_scalar_multiples_are_projectively_equal(a, k):
    assume(not a.is_zero())
    m = ScaledMatrix([[q, 1 + q], [2, -1]], L)
    assert proj_eq(m, m * (a * q ** k))


def test_json_roundtrip():
    m = ScaledMatrix([[C10.gen(), 1], [0, -1]], C10, 5, -1)
    back = matrix_from_json(matrix_to_json(m))
    assert mat_eq(back, m) and back.scale_base == 5 and back.scale_exp == -1
