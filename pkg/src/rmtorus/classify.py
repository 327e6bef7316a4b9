"""Verdicts on a profile ``(g, v0)``: Hilbert data, Koszulity, ampleness.

A profile is built for any det-1 matrix and primitive base vector; whether it
satisfies the positivity hypotheses (positive real eigenvalues, ``M > 0``) is
checked only when a verdict is requested.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NonPrimitiveBase, NotAdmissible, NotKoszul, PreconditionViolated
from .lattice import (
    EigenClass,
    KVector,
    SL2Matrix,
    chi,
    classify_eigen,
    compose,
    inverse,
    is_primitive,
    right_twist_matrix,
)
from .quadfield import (
    INFINITY,
    EigenFrame,
    eigen_frame,
    eigenvalue_below_one,
    fixed_points,
    fractional_linear,
    halfplane_test,
    qchi,
)
from .series import RationalFunction, dual_series, hilbert_series


class AlphaFlag(enum.Enum):
    TRIVIAL = "trivial"
    NONTRIVIAL_OR_UNKNOWN = "unknown"


class Status(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    BOUNDARY = "boundary"


DEGREE_ONE_CONDITION = "det F^2(E) != (det F(E))^N (x) det(E)^-1"
QUADRATIC_CONDITION = "det F^3(E) != (det F^2(E))^(N+1) (x) (det F(E))^(-N-1) (x) det(E)"


@dataclass(frozen=True)
class Verdict:
    status: Status
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    def label(self) -> str:
        if self.status is Status.BOUNDARY:
            return "boundary:det-condition"
        return self.status.value

    def __str__(self):
        return self.label()


HOLDS = Verdict(Status.HOLDS)
FAILS = Verdict(Status.FAILS)


@dataclass(frozen=True)
class AlgebraProfile:
    g: SL2Matrix
    v0: KVector
    N: int
    M: int
    alpha: AlphaFlag
    eigen_class: EigenClass
    frame: EigenFrame | None = field(default=None, compare=False)
    theta_attract: object = field(default=None, compare=False)
    theta_repel: object = field(default=None, compare=False)

    @property
    def admissible(self) -> bool:
        return (
            self.eigen_class in (EigenClass.UNIPOTENT_POSITIVE, EigenClass.HYPERBOLIC_POSITIVE)
            and self.M > 0
        )

    @property
    def hyperbolic(self) -> bool:
        return self.eigen_class is EigenClass.HYPERBOLIC_POSITIVE

    @property
    def heart_sign(self) -> int:
        """+1 if v0 lies in H_theta for the attracting fixed point, -1 if -v0 does.

        The half-plane ``{chi(u, .) > 0}`` always contains v0; it coincides with
        ``H_theta`` or with its negative, and the sign records which.
        """
        if self.frame is None:
            return 1
        return 1 if halfplane_test(self.theta_attract, self.v0) else -1

    def hilbert(self) -> RationalFunction:
        return hilbert_series(self.N, self.M)


def profile(g: SL2Matrix, v0: KVector, alpha: AlphaFlag = AlphaFlag.NONTRIVIAL_OR_UNKNOWN) -> AlgebraProfile:
    if not is_primitive(v0):
        raise NonPrimitiveBase(f"base vector {v0} is not primitive")
    N = g.trace
    M = chi(v0, g @ v0)
    cls = classify_eigen(g)
    frame = attract = repel = None
    if cls is EigenClass.HYPERBOLIC_POSITIVE and M > 0:
        frame = eigen_frame(g, v0)
        attract, repel = frame.theta_attract, frame.theta_repel
        assert fractional_linear(g, attract) == attract
        assert qchi(frame.u, (v0.deg, v0.rk)) > 0
    elif cls is EigenClass.HYPERBOLIC_POSITIVE:
        p, q = fixed_points(g)
        # eigenvalue of (theta, 1) is c*theta + d
        attract, repel = (p, q) if g.c * p + g.d < 1 else (q, p)
    elif cls is EigenClass.UNIPOTENT_POSITIVE:
        attract = repel = INFINITY if g.c == 0 else Fraction(g.a - g.d, 2 * g.c)
    return AlgebraProfile(g, v0, N, M, alpha, cls, frame, attract, repel)


def realizing_profile(N: int, M: int, alpha: AlphaFlag = AlphaFlag.NONTRIVIAL_OR_UNKNOWN):
    """Some profile with trace N and ``chi(v0, g v0) == M``, base ``v0 = (0, 1)``.

    With that base, ``M`` is the upper-right entry, so one needs
    ``a (N - a) == 1 (mod M)``; returns None when no such ``a`` exists.
    """
    if M == 0:
        return None
    for a in range(abs(M)):
        d = N - a
        if (a * d - 1) % M == 0:
            return profile(SL2Matrix(a, M, (a * d - 1) // M, d), KVector(0, 1), alpha)
    return None


def _require_admissible(p: AlgebraProfile) -> None:
    if not p.admissible:
        raise NotAdmissible(
            f"profile g={p.g}, v0={p.v0} has N={p.N}, M={p.M}, class {p.eigen_class.value}; "
            "need positive real eigenvalues and M > 0"
        )


# verdict rules in terms of (N, M) alone


def degree_one_rule(N: int, M: int) -> Verdict:
    if M >= N + 1:
        return HOLDS
    if M == N:
        return Verdict(Status.BOUNDARY, DEGREE_ONE_CONDITION)
    return FAILS


def quadratic_rule(N: int, M: int, alpha: AlphaFlag) -> Verdict:
    if M >= N + 2:
        return HOLDS
    if M == N + 1:
        if alpha is AlphaFlag.TRIVIAL:
            return Verdict(Status.FAILS, "M = N+1 with trivial alpha forces a cubic relation")
        return Verdict(Status.BOUNDARY, QUADRATIC_CONDITION)
    return FAILS


def koszul_rule(N: int, M: int) -> Verdict:
    return HOLDS if M >= N + 2 else FAILS


def finitely_generated_rule(N: int, M: int) -> Verdict:
    return HOLDS if M >= N - 1 else FAILS


UNIPOTENT_AMPLE = Verdict(Status.HOLDS, "unipotent case, via the commutative (line bundle) argument")


def ample_rule(N: int, M: int) -> Verdict:
    if N == 2:
        return UNIPOTENT_AMPLE
    return HOLDS if M >= N - 1 else FAILS


def phase_verdicts(N: int, M: int, alpha: AlphaFlag = AlphaFlag.NONTRIVIAL_OR_UNKNOWN) -> dict[str, Verdict]:
    """Verdicts for any admissible profile with these invariants (``N >= 2``, ``M > 0``)."""
    if N < 2 or M <= 0:
        raise NotAdmissible(f"N={N}, M={M}: need N >= 2 and M > 0")
    return {
        "degree_one": degree_one_rule(N, M),
        "quadratic": quadratic_rule(N, M, alpha),
        "koszul": koszul_rule(N, M),
        "finitely_generated": finitely_generated_rule(N, M),
        "ample": ample_rule(N, M),
    }


def degree_one_generated(p: AlgebraProfile) -> Verdict:
    _require_admissible(p)
    return degree_one_rule(p.N, p.M)


def quadratic(p: AlgebraProfile) -> Verdict:
    _require_admissible(p)
    return quadratic_rule(p.N, p.M, p.alpha)


def koszul(p: AlgebraProfile) -> Verdict:
    _require_admissible(p)
    return koszul_rule(p.N, p.M)


def finitely_generated(p: AlgebraProfile) -> Verdict:
    _require_admissible(p)
    return finitely_generated_rule(p.N, p.M)


def ample(p: AlgebraProfile) -> Verdict:
    """Ampleness of ``(F^n E)`` in the heart attached to the attracting fixed point."""
    _require_admissible(p)
    if p.eigen_class is EigenClass.HYPERBOLIC_POSITIVE and p.frame is None:
        raise NotAdmissible("hyperbolic profile without eigen frame")
    return ample_rule(p.N, p.M)


def koszul_dual_matrix(g: SL2Matrix, v0: KVector) -> SL2Matrix:
    return compose(right_twist_matrix(v0), inverse(g))


def koszul_dual(p: AlgebraProfile) -> AlgebraProfile:
    if not koszul(p).holds:
        raise NotKoszul(f"N={p.N}, M={p.M}: Koszul needs M >= N + 2")
    gd = koszul_dual_matrix(p.g, p.v0)
    dual = profile(gd, p.v0, AlphaFlag.NONTRIVIAL_OR_UNKNOWN)
    assert dual.N == p.M - p.N
    assert dual.M == p.M
    assert dual.hilbert() == dual_series(p.hilbert())
    return dual


# reports


@dataclass(frozen=True)
class EigenlemReport:
    condition_i: bool
    condition_i_prime: bool
    condition_ii: bool
    scan: tuple

    @property
    def consistent(self) -> bool:
        return self.condition_i == self.condition_i_prime == self.condition_ii


def orbit_chi_values(g: SL2Matrix, v: KVector, horizon: int) -> list[int]:
    """``chi(v, g^n v)`` for ``n = 0..horizon`` by repeated matrix application."""
    out, w = [], v
    for _ in range(horizon + 1):
        out.append(chi(v, w))
        w = g @ w
    return out


def eigenlem_report(g: SL2Matrix, v: KVector, horizon: int = 40) -> EigenlemReport:
    if v.is_zero():
        raise PreconditionViolated("v must be nonzero")
    scan = orbit_chi_values(g, v, horizon)
    cond_ii = g.trace >= 2 and chi(v, g @ v) > 0
    cond_i_prime = all(x > 0 for x in scan[1:])
    tail = scan[max(1, (horizon + 1) // 2):]
    cond_i = bool(tail) and all(x > 0 for x in tail)
    return EigenlemReport(cond_i, cond_i_prime, cond_ii, tuple(scan))


@dataclass(frozen=True)
class VerpropReport:
    i: bool
    ii: bool
    iii: bool
    iv: bool
    gaps: tuple

    @property
    def consistent(self) -> bool:
        return self.i == self.ii == self.iii == self.iv


def _closed_form_gaps(g: SL2Matrix, M: int, horizon: int) -> list[Fraction]:
    """``chi(v, g^n v) - tr(g^n)`` for ``n = 1..horizon`` from eigenvalue closed forms."""
    N = g.trace
    if N == 2:
        return [Fraction(n * M - 2) for n in range(1, horizon + 1)]
    small = eigenvalue_below_one(g)
    big = small.conj()
    gap = big - small
    out = []
    pw_big, pw_small = big, small
    for _ in range(horizon):
        value = M * (pw_big - pw_small) / gap - (pw_big + pw_small)
        assert value.is_rational()
        out.append(value.x)
        pw_big, pw_small = pw_big * big, pw_small * small
    return out


def verprop_report(g: SL2Matrix, v: KVector, horizon: int = 40) -> VerpropReport:
    cls = classify_eigen(g)
    M = chi(v, g @ v)
    if cls not in (EigenClass.UNIPOTENT_POSITIVE, EigenClass.HYPERBOLIC_POSITIVE) or M <= 0:
        raise PreconditionViolated("need positive real eigenvalues (g != I) and chi(v, g v) > 0")
    N = g.trace
    gaps = _closed_form_gaps(g, M, horizon)
    # cross-check against explicit powers
    w, h = v, g
    for n in range(1, horizon + 1):
        w = g @ w
        assert gaps[n - 1] == chi(v, w) - h.trace
        h = compose(h, g)
    increasing = all(b > a for a, b in zip(gaps, gaps[1:]))
    cond_i = increasing and gaps[-1] > 0
    cond_ii = any(x >= 0 for x in gaps)
    cond_iii = M * M > N * N - 4
    cond_iv = cls is EigenClass.UNIPOTENT_POSITIVE or M >= N
    return VerpropReport(cond_i, cond_ii, cond_iii, cond_iv, tuple(gaps))


def verdicts(p: AlgebraProfile) -> dict[str, Verdict]:
    return {
        "degree_one": degree_one_generated(p),
        "quadratic": quadratic(p),
        "koszul": koszul(p),
        "finitely_generated": finitely_generated(p),
        "ample": ample(p),
    }
