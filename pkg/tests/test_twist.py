import pytest
from hypothesis import given, settings, strategies as st

from rmtorus.classify import profile, realizing_profile
from rmtorus.errors import NoFrame, NotAdmissible, NotInHalfplane, NotKoszul, NotPrimitive, WrongBoundary
from rmtorus.lattice import KVector, SL2Matrix, chi, is_primitive
from rmtorus.quadfield import QuadNum, halfplane_test
from rmtorus.series import coefficients, dual_series, hilbert_series, twist_series_F
from rmtorus.twist import (
    QuadMatrix,
    boundary_exit,
    descent_chain,
    first_exit,
    h_matrix,
    h_matrix_integer,
    koszul_dual_dims,
    s_cube_check,
    s_matrix,
    to_eigenbasis,
    trajectory,
    translate_by_powers,
    twist_orbit,
)

SQ2 = QuadNum.sqrt(2)
SQRT2 = profile(SL2Matrix(3, -4, -2, 3), KVector(3, 1))
BOUNDARY = profile(SL2Matrix(2, -1, -3, 2), KVector(1, 0))
GOLDEN = profile(SL2Matrix(2, 1, 1, 1), KVector(0, 1))
LINE4 = profile(SL2Matrix(1, 4, 0, 1), KVector(0, 1))


def test_orbit_examples():
    o = twist_orbit(SQRT2, 4)
    assert o.chi[(0, 1)] == 14
    assert o.chi[(1, 2)] == 14 * 14 - 84 == 112
    r = 3 - 2 * SQ2
    assert o.rk[0] == 1
    assert o.rk[1] == 14 * r - 1 == QuadNum(2, 41, -28)
    assert o.rk[1] > 0
    F = twist_series_F(6, 14).expand(3, 3)
    assert all(o.chi[(n, n + k + 1)] == F[n][k] for n in range(4) for k in range(4 - n))


def test_orbit_rejects_inadmissible():
    with pytest.raises(NotAdmissible):
        twist_orbit(profile(SL2Matrix(0, -1, 1, 0), KVector(1, 0)), 3)


def test_dual_dims():
    assert koszul_dual_dims(SQRT2, 5) == coefficients(hilbert_series(8, 14), 5)
    assert koszul_dual_dims(LINE4, 4) == [1, 4, 8, 12, 16]
    assert koszul_dual_dims(SQRT2, 0) == [1]
    with pytest.raises(NotKoszul):
        koszul_dual_dims(GOLDEN, 3)


def test_h_matrix_examples():
    d = QuadNum(3, 0, 1) / 2
    assert h_matrix(BOUNDARY, 0) == QuadMatrix(1 + d, -d, d, 1 - d)
    for i in range(5):
        assert h_matrix(BOUNDARY, i).det() == 1
        # basis-change oracle
        assert to_eigenbasis(BOUNDARY, h_matrix_integer(BOUNDARY, i)) == h_matrix(BOUNDARY, i)
    with pytest.raises(NoFrame):
        h_matrix(LINE4, 0)


def test_s_matrix():
    assert s_matrix(BOUNDARY).trace() == 1
    assert s_matrix(SQRT2).trace() == -8
    assert s_cube_check(BOUNDARY)
    assert s_cube_check(realizing_profile(8, 7))
    with pytest.raises(WrongBoundary):
        s_cube_check(SQRT2)


def test_h_product_is_power_of_s():
    # h_{-n} ... h_0 = D^{-n-1} S^{n+1} with D = diag(r, 1/r)
    p = SQRT2
    r = p.frame.r
    S = s_matrix(p)
    prod = QuadMatrix(1, 0, 0, 1)
    for n in range(4):
        prod = h_matrix(p, n) @ prod
        rn = r ** (n + 1)
        assert prod == QuadMatrix.diag(1 / rn, rn) @ S ** (n + 1)


def test_trajectories():
    steps = trajectory(BOUNDARY, BOUNDARY.v0, 5)
    assert steps[0].in_halfplane
    assert first_exit(steps) <= 3
    assert first_exit(trajectory(GOLDEN, GOLDEN.v0, 20)) is None
    assert len(trajectory(GOLDEN, GOLDEN.v0, 0)) == 1


def test_translation():
    # chi(v0, v0) = 0, so one step is needed
    k, w = translate_by_powers(BOUNDARY, KVector(1, 0))
    assert k == 1 and w == BOUNDARY.g @ BOUNDARY.v0
    k, w = translate_by_powers(BOUNDARY, KVector(-1, -2))
    assert chi(BOUNDARY.v0, w) > 0
    with pytest.raises(NotInHalfplane):
        translate_by_powers(BOUNDARY, KVector(-1, 0))


@given(st.integers(-30, 30), st.integers(-30, 30))
def test_boundary_exit_everywhere(x, y):
    v = KVector(x, y)
    if v.is_zero() or not halfplane_test(BOUNDARY.theta_attract, v):
        return
    assert boundary_exit(BOUNDARY, v) <= 3


def test_descent_examples():
    chain = descent_chain(SQ2, KVector(1, 0), 2)
    assert chain == [KVector(-1, -1), KVector(-4, -3)]
    with pytest.raises(NotInHalfplane):
        descent_chain(SQ2, KVector(1, 1), 2)
    with pytest.raises(NotPrimitive):
        descent_chain(SQ2, KVector(2, 0), 2)


thetas = st.sampled_from([SQ2, -SQ2, QuadNum(5, 1, 1) / 2, QuadNum(3, 1, -1), QuadNum(7, 2, 3) / 5])


@settings(max_examples=50, deadline=None)
@given(thetas, st.integers(-6, 6), st.integers(-6, 6), st.integers(1, 12))
def test_descent_properties(theta, x, y, n):
    v = KVector(x, y)
    if not is_primitive(v) or not halfplane_test(theta, v):
        return
    chain = descent_chain(theta, v, n)
    assert len(chain) == n
    prev = v
    for w in chain:
        assert is_primitive(w) and halfplane_test(theta, w)
        assert chi(prev, w) == 1
        assert w.deg - theta * w.rk < prev.deg - theta * prev.rk
        prev = w


NM = st.tuples(st.integers(2, 10), st.integers(1, 15)).map(lambda nm: realizing_profile(*nm)).filter(lambda p: p is not None)


@settings(max_examples=40, deadline=None)
@given(NM, st.integers(1, 8))
def test_orbit_positivity_when_koszul(p, h):
    o = twist_orbit(p, h)
    if p.M >= p.N + 2:
        assert all(x > 0 for x in o.rk)
        assert all(v > 0 for v in o.chi.values())
        assert koszul_dual_dims(p, h) == coefficients(dual_series(p.hilbert()), h)
    if p.frame is not None:
        S = s_matrix(p)
        assert S.det() == 1 and S.trace() == p.N - p.M
