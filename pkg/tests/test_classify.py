import pytest
from hypothesis import given, settings, strategies as st

from conftest import primitive_vectors, sl2
from rmtorus.classify import (
    AlphaFlag,
    Status,
    ample,
    degree_one_generated,
    eigenlem_report,
    finitely_generated,
    koszul,
    koszul_dual,
    koszul_dual_matrix,
    phase_verdicts,
    profile,
    quadratic,
    realizing_profile,
    verdicts,
    verprop_report,
)
from rmtorus.errors import NonPrimitiveBase, NotAdmissible, NotKoszul, PreconditionViolated
from rmtorus.lattice import EigenClass, KVector, SL2Matrix, chi, right_twist_matrix
from rmtorus.quadfield import QuadNum, halfplane_test
from rmtorus.series import coefficients, dual_series, hilbert_series

TRIVIAL = AlphaFlag.TRIVIAL
UNKNOWN = AlphaFlag.NONTRIVIAL_OR_UNKNOWN

LINE4 = profile(SL2Matrix(1, 4, 0, 1), KVector(0, 1), TRIVIAL)
SQRT2 = profile(SL2Matrix(3, -4, -2, 3), KVector(3, 1), TRIVIAL)
GOLDEN = profile(SL2Matrix(2, 1, 1, 1), KVector(0, 1), TRIVIAL)
BOUNDARY = profile(SL2Matrix(2, -1, -3, 2), KVector(1, 0))


def test_profile_examples():
    assert (LINE4.N, LINE4.M, LINE4.eigen_class) == (2, 4, EigenClass.UNIPOTENT_POSITIVE)
    assert (SQRT2.N, SQRT2.M) == (6, 14) and SQRT2.theta_attract == QuadNum.sqrt(2)
    assert (GOLDEN.N, GOLDEN.M) == (3, 1)
    assert halfplane_test(SQRT2.theta_attract, SQRT2.v0)
    with pytest.raises(NonPrimitiveBase):
        profile(SL2Matrix(1, 4, 0, 1), KVector(0, 2))


def test_inadmissible_profiles_are_built():
    p = profile(SL2Matrix(0, -1, 1, 0), KVector(1, 0))
    assert not p.admissible
    with pytest.raises(NotAdmissible):
        koszul(p)
    q = profile(SL2Matrix(1, -4, 0, 1), KVector(0, 1))
    assert q.M == -4 and not q.admissible


def test_degree_one():
    assert degree_one_generated(LINE4).status is Status.HOLDS
    assert degree_one_generated(SQRT2).holds
    assert degree_one_generated(GOLDEN).status is Status.FAILS
    b = degree_one_generated(realizing_profile(5, 5))
    assert b.status is Status.BOUNDARY and "det F^2" in b.note
    assert degree_one_generated(realizing_profile(5, 5, TRIVIAL)).status is Status.BOUNDARY


def test_quadratic():
    assert quadratic(LINE4).holds
    line3 = profile(SL2Matrix(1, 3, 0, 1), KVector(0, 1), TRIVIAL)
    assert quadratic(line3).status is Status.FAILS
    # (3, 4) has no integer realization, so the rule is checked directly
    assert phase_verdicts(3, 4)["quadratic"].status is Status.BOUNDARY
    assert phase_verdicts(3, 4, TRIVIAL)["quadratic"].status is Status.FAILS
    assert quadratic(realizing_profile(6, 7)).status is Status.BOUNDARY
    assert quadratic(realizing_profile(6, 7, TRIVIAL)).status is Status.FAILS
    assert quadratic(SQRT2).holds


def test_koszul():
    assert koszul(LINE4).holds
    assert phase_verdicts(3, 4)["koszul"].status is Status.FAILS
    assert koszul(realizing_profile(6, 7)).status is Status.FAILS
    assert koszul(SQRT2).holds


def test_koszul_dual_examples():
    d = koszul_dual(SQRT2)
    assert d.g == SL2Matrix(6, 11, 1, 2)
    assert (d.N, d.M) == (8, 14)
    dd = koszul_dual(d)
    assert dd.hilbert() == SQRT2.hilbert()
    with pytest.raises(NotKoszul):
        koszul_dual(GOLDEN)


def test_finite_generation_and_ample():
    assert finitely_generated(GOLDEN).status is Status.FAILS
    assert finitely_generated(BOUNDARY).holds
    assert finitely_generated(profile(SL2Matrix(1, 1, 0, 1), KVector(0, 1))).holds
    assert ample(SQRT2).holds
    assert ample(GOLDEN).status is Status.FAILS
    assert ample(BOUNDARY).holds
    assert "unipotent" in ample(LINE4).note


def test_eigenlem_examples():
    rep = eigenlem_report(SL2Matrix(2, 1, 1, 1), KVector(0, 1), 10)
    assert rep.condition_i and rep.condition_i_prime and rep.condition_ii
    assert rep.scan[:6] == (0, 1, 3, 8, 21, 55)
    rep = eigenlem_report(SL2Matrix(-2, -1, -1, -1), KVector(0, 1), 10)
    assert not (rep.condition_i or rep.condition_i_prime or rep.condition_ii)
    assert rep.scan[1:4] == (-1, 3, -8)
    assert not eigenlem_report(SL2Matrix.identity(), KVector(1, 2), 10).condition_ii
    with pytest.raises(PreconditionViolated):
        eigenlem_report(SL2Matrix.identity(), KVector(0, 0))


def test_verprop_examples():
    rep = verprop_report(SL2Matrix(1, 1, 0, 1), KVector(0, 1))
    assert rep.i and rep.ii and rep.iii and rep.iv
    rep = verprop_report(SQRT2.g, SQRT2.v0)
    assert rep.consistent and rep.i
    rep = verprop_report(GOLDEN.g, GOLDEN.v0)
    assert rep.consistent and not rep.i
    with pytest.raises(PreconditionViolated):
        verprop_report(SL2Matrix(0, -1, 1, 0), KVector(1, 0))


def test_phase_verdicts_match_profiles():
    for p in (LINE4, SQRT2, GOLDEN, BOUNDARY):
        assert phase_verdicts(p.N, p.M, p.alpha) == verdicts(p)


admissible = st.tuples(sl2(), primitive_vectors).map(lambda gv: profile(*gv)).filter(lambda p: p.admissible)


@settings(max_examples=80, deadline=None)
@given(admissible)
def test_verdict_monotonicity(p):
    v = verdicts(p)
    if v["koszul"].holds:
        assert v["quadratic"].holds
    if v["quadratic"].holds:
        assert v["degree_one"].holds
    if v["degree_one"].holds:
        assert v["finitely_generated"].holds
    if p.frame is not None:
        assert halfplane_test(p.theta_attract, p.v0) == (p.heart_sign == 1)


@settings(max_examples=80, deadline=None)
@given(admissible)
def test_dual_postconditions(p):
    if not koszul(p).holds:
        return
    d = koszul_dual(p)
    assert d.g == right_twist_matrix(p.v0) @ (p.g ** -1)
    assert d.N == p.M - p.N and d.M == p.M
    assert koszul_dual_matrix(p.g, p.v0) == d.g


def test_koszul_iff_dual_nonnegative():
    for N in range(2, 31):
        for M in range(1, 31):
            cs = coefficients(dual_series(hilbert_series(N, M)), 60)
            assert (M >= N + 2) == all(c >= 0 for c in cs), (N, M)


@given(sl2(), st.integers(-6, 6), st.integers(-6, 6))
def test_eigenlem_equivalence(g, x, y):
    if (x, y) == (0, 0):
        return
    rep = eigenlem_report(g, KVector(x, y), 40)
    assert rep.condition_ii == rep.condition_i_prime


def test_realizing_profile():
    p = realizing_profile(8, 7)
    assert (p.N, p.M) == (8, 7) and chi(p.v0, p.g @ p.v0) == 7
    assert realizing_profile(5, 4) is None
    assert realizing_profile(3, 4) is None
    assert realizing_profile(3, 0) is None
