"""Realizations of real multiplication, ample slope sequences, opposite matrices."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

from .classify import AlgebraProfile, AlphaFlag, ample, profile
from .errors import RationalTheta
from .lattice import EigenClass, KVector, SL2Matrix, chi, is_primitive
from .quadfield import (
    QuadNum,
    QuadOrder,
    exact_sign,
    fractional_linear,
    halfplane_test,
    matrix_of_unit,
    theta_of,
    unit_below_one,
)


def primes_from(start: int = 5) -> Iterator[int]:
    """Primes ``>= start`` in increasing order (incremental sieve)."""
    composites: dict[int, list[int]] = {}
    for n in itertools.count(2):
        factors = composites.pop(n, None)
        if factors is None:
            composites[n * n] = [n]
            if n >= start:
                yield n
        else:
            for p in factors:
                composites.setdefault(n + p, []).append(p)


def candidate_vectors() -> Iterator[KVector]:
    """Primitive vectors by sup-norm, then lexicographically in ``(deg, rk)``."""
    for s in itertools.count(1):
        ring = [
            (x, y)
            for x in range(-s, s + 1)
            for y in range(-s, s + 1)
            if max(abs(x), abs(y)) == s
        ]
        for x, y in sorted(ring):
            v = KVector(x, y)
            if is_primitive(v):
                yield v


class RMPair(NamedTuple):
    g: SL2Matrix
    v: KVector
    profile: AlgebraProfile

    @property
    def koszul_grade(self) -> bool:
        return self.profile.M >= self.profile.N + 2


def rm_pair(
    order: QuadOrder,
    koszul_grade: bool = False,
    alpha: AlphaFlag = AlphaFlag.NONTRIVIAL_OR_UNKNOWN,
) -> RMPair:
    """A profile ``(g, v)`` with ``g`` fixing theta and an ample orbit of ``v``.

    ``g`` is multiplication by the unit below one, so ``(theta, 1)`` spans the
    contracting eigenline. The first candidate in ``H_theta`` with
    ``chi(v, g v) >= tr g`` (or ``>= tr g + 2`` when ``koszul_grade``) is taken.
    """
    theta = theta_of(order)
    r = unit_below_one(order)
    g = matrix_of_unit(order, r)
    N = g.trace
    need = N + 2 if koszul_grade else N
    for v in candidate_vectors():
        if halfplane_test(theta, v) and chi(v, g @ v) >= need:
            break
    p = profile(g, v, alpha)
    assert fractional_linear(g, theta) == theta
    assert p.eigen_class is EigenClass.HYPERBOLIC_POSITIVE
    assert p.theta_attract == theta and p.heart_sign == 1
    assert p.M >= N and ample(p).holds
    return RMPair(g, v, p)


@dataclass(frozen=True)
class AmpleSeqItem:
    d: int
    r: int
    mu: Fraction
    theta_gap_ok: bool


def ample_sequence(theta: QuadNum, count: int) -> list[AmpleSeqItem]:
    """Slopes ``d/r`` above theta with ``1/r <= d/r - theta <= 3/r``.

    Item ``k`` of the returned list plays the role of the object indexed by
    ``n = -(k + 1)``: the sequence runs towards minus infinity as r grows.
    """
    if not isinstance(theta, QuadNum) or theta.is_rational():
        raise RationalTheta("ample_sequence needs an irrational theta")
    out = []
    for r in itertools.islice(primes_from(5), count):
        d = math.ceil(r * theta + 1)
        if d % r == 0:
            d += 1
        mu = Fraction(d, r)
        gap = mu - theta
        ok = exact_sign(gap - Fraction(1, r)) >= 0 and exact_sign(Fraction(3, r) - gap) >= 0
        assert ok and math.gcd(d, r) == 1
        out.append(AmpleSeqItem(d, r, mu, ok))
    return out


def opposite_matrix(g: SL2Matrix) -> SL2Matrix:
    """``[[d, b], [c, a]]``: the matrix paired with ``1/r`` on the opposite side."""
    return SL2Matrix(g.d, g.b, g.c, g.a)
