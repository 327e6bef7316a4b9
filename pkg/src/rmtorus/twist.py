"""Twist orbits, the h- and S-matrices of the ampleness argument, descent chains."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .classify import AlgebraProfile, koszul
from .errors import NoFrame, NotAdmissible, NotInHalfplane, NotKoszul, NotPrimitive, WrongBoundary
from .lattice import KVector, chi, inverse, is_primitive, left_twist_matrix
from .quadfield import QuadNum, exact_sign, halfplane_test, qact
from .series import coefficients, dual_series, hilbert_series, twist_series_F, twist_series_R


@dataclass(frozen=True)
class TwistOrbit:
    profile: AlgebraProfile
    horizon: int
    chi: dict  # (n, m) -> chi(F'_n, F_m), 0 <= n < m <= horizon
    rk: list  # rank function of F'_n in the invariant heart, n = 0..horizon


def _eigenvalue(p: AlgebraProfile):
    if p.frame is not None:
        return p.frame.r
    return Fraction(1)


def twist_orbit(p: AlgebraProfile, horizon: int) -> TwistOrbit:
    if not p.admissible:
        raise NotAdmissible(f"profile with N={p.N}, M={p.M} is not admissible")
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    a = coefficients(hilbert_series(p.N, p.M), horizon)
    table = {(0, m): a[m] for m in range(1, horizon + 1)}
    for n in range(1, horizon):
        lead = table[(n - 1, n)]
        for m in range(n + 1, horizon + 1):
            table[(n, m)] = lead * a[m - n] - table[(n - 1, m)]
    r = _eigenvalue(p)
    rk = [Fraction(1)] if not isinstance(r, QuadNum) else [QuadNum(r.D, 1)]
    rpow = r
    for n in range(1, horizon + 1):
        rk.append(table[(n - 1, n)] * rpow - rk[-1])
        rpow = rpow * r
    orbit = TwistOrbit(p, horizon, table, rk)
    _check_against_series(orbit)
    return orbit


def _check_against_series(orbit: TwistOrbit) -> None:
    p, h = orbit.profile, orbit.horizon
    F = twist_series_F(p.N, p.M).expand(h - 1, h - 1)
    for (n, m), value in orbit.chi.items():
        assert F[n][m - n - 1] == value, (n, m)
    R = coefficients(twist_series_R(p.N, p.M, _eigenvalue(p)), h)
    assert R == orbit.rk


def koszul_dual_dims(p: AlgebraProfile, horizon: int) -> list[int]:
    """Dimensions of the Koszul dual algebra in degrees ``0..horizon``."""
    if not koszul(p).holds:
        raise NotKoszul(f"N={p.N}, M={p.M} is not Koszul")
    if horizon == 0:
        return [1]
    orbit = twist_orbit(p, horizon)
    dims = [1] + [orbit.chi[(n - 1, n)] for n in range(1, horizon + 1)]
    assert dims == coefficients(dual_series(hilbert_series(p.N, p.M)), horizon)
    return dims


# 2x2 matrices over Q(sqrt D)


@dataclass(frozen=True)
class QuadMatrix:
    a: object
    b: object
    c: object
    d: object

    @classmethod
    def diag(cls, x, y) -> QuadMatrix:
        return cls(x, 0, 0, y)

    def __matmul__(self, other):
        if isinstance(other, QuadMatrix):
            return QuadMatrix(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        x, y = other
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def __pow__(self, n: int) -> QuadMatrix:
        out = QuadMatrix(1, 0, 0, 1)
        for _ in range(n):
            out = out @ self
        return out

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other):
        if not isinstance(other, QuadMatrix):
            return NotImplemented
        return all(x == y for x, y in zip(self.entries(), other.entries()))

    def __hash__(self):
        return hash(self.entries())


def _frame(p: AlgebraProfile):
    if p.frame is None:
        raise NoFrame("profile has no eigen frame (needs a hyperbolic g with M > 0)")
    return p.frame


def h_matrix(p: AlgebraProfile, i: int) -> QuadMatrix:
    """The class of the shifted left twist along ``F^{-i}(E)``, in the ``(u, u')`` basis."""
    fr = _frame(p)
    delta, r = fr.delta, fr.r
    h0 = QuadMatrix(1 + delta, -delta, delta, 1 - delta)
    if i == 0:
        return h0
    ri = r ** i
    return QuadMatrix.diag(1 / ri, ri) @ h0 @ QuadMatrix.diag(ri, 1 / ri)


def h_matrix_integer(p: AlgebraProfile, i: int):
    """Same map in the standard lattice basis: the left twist along ``g^{-i} v0``."""
    return left_twist_matrix(inverse(p.g) ** i @ p.v0)


def to_eigenbasis(p: AlgebraProfile, g) -> QuadMatrix:
    """Matrix of the integer map ``g`` written in the ``(u, u')`` basis."""
    fr = _frame(p)
    cu = fr.coords(qact(g, fr.u))
    cup = fr.coords(qact(g, fr.uprime))
    return QuadMatrix(cu[0], cup[0], cu[1], cup[1])


def s_matrix(p: AlgebraProfile) -> QuadMatrix:
    fr = _frame(p)
    S = QuadMatrix.diag(fr.r, 1 / fr.r) @ h_matrix(p, 0)
    assert S.det() == 1
    assert S.trace() == p.N - p.M
    return S


def s_cube_check(p: AlgebraProfile) -> bool:
    if p.N - p.M != 1:
        raise WrongBoundary(f"N - M = {p.N - p.M}, the cube identity needs N - M = 1")
    S = s_matrix(p)
    return S @ S @ S == QuadMatrix(-1, 0, 0, -1)


@dataclass(frozen=True)
class TrajectoryStep:
    coords: tuple  # (x, y) with w = x u + y u'
    in_halfplane: bool


def trajectory(p: AlgebraProfile, v, steps: int) -> list[TrajectoryStep]:
    """``v, h_0 v, h_{-1} h_0 v, ...`` with membership in ``{chi(u, .) > 0}``.

    Membership is the sign of the ``u'``-coordinate, because
    ``chi(u, x u + y u') = y * Delta`` and ``Delta > 0``.
    """
    fr = _frame(p)
    w = fr.coords(v)
    out = [TrajectoryStep(w, exact_sign(w[1]) > 0)]
    for i in range(steps):
        w = h_matrix(p, i) @ w
        out.append(TrajectoryStep(w, exact_sign(w[1]) > 0))
    return out


def first_exit(steps: list[TrajectoryStep]):
    for k, s in enumerate(steps):
        if not s.in_halfplane:
            return k
    return None


def translate_by_powers(p: AlgebraProfile, v: KVector, limit: int = 200) -> tuple[int, KVector]:
    """Least ``k >= 0`` with ``chi(v0, g^k v) > 0``, and ``g^k v``.

    For ``v`` in the half-plane the expanding component eventually dominates,
    so such ``k`` exists.
    """
    if not halfplane_test(p.theta_attract, v * p.heart_sign):
        raise NotInHalfplane(f"{v} is not in the heart of the profile")
    w = v
    for k in range(limit + 1):
        if chi(p.v0, w) > 0:
            return k, w
        w = p.g @ w
    raise AssertionError("no positive translate found within the limit")


def boundary_exit(p: AlgebraProfile, v: KVector) -> int | None:
    """Steps needed to leave ``H`` after translating ``v`` by powers of ``g``."""
    if p.N - p.M != 1:
        raise WrongBoundary(f"N - M = {p.N - p.M}, expected 1")
    _, w = translate_by_powers(p, v)
    return first_exit(trajectory(p, w, 3))


# descent chains


def _bezout(a: int, b: int) -> tuple[int, int]:
    """``(x, y)`` with ``a x + b y == gcd(a, b)``."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -x0, -y0
    return x0, y0


def descent_step(theta, v: KVector) -> KVector:
    """The proper quotient class: ``chi(v, w) == 1`` and ``0 < w.deg - theta w.rk < v.deg - theta v.rk``."""
    length = v.deg - theta * v.rk
    # m rk - n deg = 1
    x, y = _bezout(v.rk, v.deg)
    m, n = x, -y
    assert m * v.rk - n * v.deg == 1
    k = math.floor((m - n * theta) / length)
    w = KVector(m - k * v.deg, n - k * v.rk)
    value = w.deg - theta * w.rk
    assert exact_sign(value) > 0 and exact_sign(length - value) > 0
    return w


def descent_chain(theta, v: KVector, steps: int) -> list[KVector]:
    if not isinstance(theta, QuadNum) or theta.is_rational():
        raise ValueError("theta must be an irrational QuadNum")
    if not is_primitive(v):
        raise NotPrimitive(f"{v} is not primitive")
    if not halfplane_test(theta, v):
        raise NotInHalfplane(f"{v} is not in H_theta for theta = {theta}")
    out = []
    for _ in range(steps):
        v = descent_step(theta, v)
        out.append(v)
    return out
