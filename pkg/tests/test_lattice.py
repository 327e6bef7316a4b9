import pytest
from hypothesis import given

from conftest import nonzero_vectors, primitive_vectors, sl2, small, vectors
from rmtorus.errors import NotPrimitive, NotSL2
from rmtorus.lattice import (
    EigenClass,
    KVector,
    SL2Matrix,
    act,
    chi,
    classify_eigen,
    compose,
    cube_identity_check,
    inverse,
    is_primitive,
    left_twist_matrix,
    right_twist_matrix,
    trace,
)


def det(g):
    return g.a * g.d - g.b * g.c


def test_chi_examples():
    assert chi(KVector(0, 1), KVector(0, 1)) == 0
    for d in range(-5, 6):
        assert chi(KVector(0, 1), KVector(d, 1)) == d
    assert chi(KVector(3, 1), KVector(5, -3)) == 14


def test_act_examples():
    assert act(SL2Matrix(1, 7, 0, 1), KVector(0, 1)) == KVector(7, 1)
    assert act(SL2Matrix(3, -4, -2, 3), KVector(3, 1)) == KVector(5, -3)
    assert SL2Matrix(3, -4, -2, 3) @ KVector(3, 1) == KVector(5, -3)


def test_inverse_trace_examples():
    assert inverse(SL2Matrix(3, -4, -2, 3)) == SL2Matrix(3, 4, 2, 3)
    assert trace(SL2Matrix(2, 1, 1, 1)) == 3


def test_rejects_bad_determinant():
    with pytest.raises(NotSL2):
        SL2Matrix(2, 0, 0, 1)
    with pytest.raises(NotSL2):
        SL2Matrix(1.0, 0, 0, 1)


def test_classify_examples():
    assert classify_eigen(SL2Matrix(1, 4, 0, 1)) is EigenClass.UNIPOTENT_POSITIVE
    assert classify_eigen(SL2Matrix(3, -4, -2, 3)) is EigenClass.HYPERBOLIC_POSITIVE
    assert classify_eigen(SL2Matrix(0, -1, 1, 0)) is EigenClass.OTHER
    assert classify_eigen(SL2Matrix.identity()) is EigenClass.IDENTITY
    assert classify_eigen(SL2Matrix(-1, 0, 0, -1)) is EigenClass.OTHER


def test_cube_identity_examples():
    assert cube_identity_check(SL2Matrix(1, 1, 0, 1))
    assert cube_identity_check(SL2Matrix(2, 1, 1, 1))


def test_twist_examples():
    L = left_twist_matrix(KVector(0, 1))
    assert L @ KVector(1, 0) == KVector(1, -1)
    assert det(left_twist_matrix(KVector(3, 1))) == 1
    assert right_twist_matrix(KVector(3, 1)) == SL2Matrix(-4, 9, -1, 2)
    with pytest.raises(NotPrimitive):
        left_twist_matrix(KVector(2, 4))
    with pytest.raises(NotPrimitive):
        right_twist_matrix(KVector(0, 0))


@given(vectors, vectors, vectors, small, small)
def test_chi_bilinear_antisymmetric(u, v, w, a, b):
    assert chi(v, w) == -chi(w, v)
    assert chi(u, a * v + b * w) == a * chi(u, v) + b * chi(u, w)


@given(nonzero_vectors, nonzero_vectors)
def test_chi_zero_iff_proportional(v, w):
    proportional = v.deg * w.rk == v.rk * w.deg
    assert (chi(v, w) == 0) == proportional


@given(sl2(), vectors, vectors)
def test_act_preserves_chi(g, v, w):
    assert chi(act(g, v), act(g, w)) == chi(v, w)
    assert act(g, act(inverse(g), v)) == v


@given(sl2(), sl2())
def test_group_laws(g, h):
    assert compose(g, inverse(g)) == SL2Matrix.identity()
    assert (g @ h) @ KVector(1, 0) == g @ (h @ KVector(1, 0))
    assert g ** -2 == inverse(g) @ inverse(g)


@given(sl2())
def test_cube_identity_everywhere(g):
    assert cube_identity_check(g)


@given(sl2())
def test_classification_by_trace(g):
    cls = classify_eigen(g)
    assert (cls is EigenClass.HYPERBOLIC_POSITIVE) == (g.trace >= 3)
    assert (cls is EigenClass.UNIPOTENT_POSITIVE) == (g.trace == 2 and g != SL2Matrix.identity())


@given(primitive_vectors, vectors)
def test_twist_matrices(v0, v):
    L, R = left_twist_matrix(v0), right_twist_matrix(v0)
    assert det(L) == 1 and det(R) == 1
    assert L @ v0 == v0
    assert R @ v0 == -v0
    assert L @ v == v - chi(v0, v) * v0
    assert R @ v == chi(v, v0) * v0 - v
    # R is minus the inverse of L
    assert compose(L, R) == SL2Matrix(-1, 0, 0, -1)


def test_is_primitive():
    assert is_primitive(KVector(3, 1))
    assert not is_primitive(KVector(2, 4))
    assert not is_primitive(KVector(0, 0))
