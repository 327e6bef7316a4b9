"""Exact arithmetic in real quadratic fields Q(sqrt D).

Everything here is decided with integer and rational arithmetic only: signs of
``x + y sqrt(D)`` come from comparing ``x**2`` with ``D * y**2``, floors from
``math.isqrt``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd, isqrt
from typing import Union

from .errors import (
    EigenvectorBase,
    FieldMismatch,
    InfinityFixed,
    InvalidOrder,
    NotAUnit,
    NotHyperbolic,
    UnipotentOrRational,
)
from .lattice import EigenClass, KVector, SL2Matrix, chi, classify_eigen

Rational = Union[int, Fraction]


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Return ``(f, D)`` with ``n == f*f*D`` and ``D`` squarefree (n > 0)."""
    if n <= 0:
        raise ValueError("squarefree_decompose needs a positive integer")
    f, D = 1, 1
    m = n
    p = 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        f *= p ** (e // 2)
        if e % 2:
            D *= p
        p += 1 if p == 2 else 2
    D *= m
    return f, D


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@total_ordering
class QuadNum:
    """``x + y*sqrt(D)`` with rational ``x, y`` and squarefree ``D >= 2``."""

    __slots__ = ("D", "x", "y")

    def __init__(self, D: int, x: Rational = 0, y: Rational = 0):
        if not isinstance(D, int) or D < 2:
            raise ValueError(f"D must be an integer >= 2, got {D!r}")
        self.D = D
        self.x = Fraction(x)
        self.y = Fraction(y)

    @classmethod
    def sqrt(cls, D: int) -> QuadNum:
        return cls(D, 0, 1)

    # coercion

    def _coerce(self, other) -> QuadNum | None:
        if isinstance(other, QuadNum):
            if other.D != self.D:
                raise FieldMismatch(f"cannot combine Q(sqrt {self.D}) with Q(sqrt {other.D})")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadNum(self.D, other, 0)
        return None

    # arithmetic

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(self.D, self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(self.D, -self.x, -self.y)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(self.D, self.x - o.x, self.y - o.y)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(
            self.D,
            self.x * o.x + self.D * self.y * o.y,
            self.x * o.y + self.y * o.x,
        )

    __rmul__ = __mul__

    def conj(self) -> QuadNum:
        return QuadNum(self.D, self.x, -self.y)

    def norm(self) -> Fraction:
        return self.x * self.x - self.D * self.y * self.y

    def inverse(self) -> QuadNum:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in a quadratic field")
        return QuadNum(self.D, self.x / n, -self.y / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> QuadNum:
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = QuadNum(self.D, 1, 0)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # order and equality

    def sign(self) -> int:
        sx, sy = _sign(self.x), _sign(self.y)
        if sy == 0:
            return sx
        if sx == 0 or sx == sy:
            return sy
        # opposite signs: the larger magnitude wins
        if self.x * self.x > self.D * self.y * self.y:
            return sx
        return sy

    def __eq__(self, other):
        if isinstance(other, QuadNum):
            return self.D == other.D and self.x == other.x and self.y == other.y
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        return NotImplemented

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self):
        if self.y == 0:
            return hash(self.x)
        return hash((self.D, self.x, self.y))

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    def is_rational(self) -> bool:
        return self.y == 0

    def __floor__(self) -> int:
        # write as (a + b sqrt D) / c with integers, c > 0
        c = math.lcm(self.x.denominator, self.y.denominator)
        a = int(self.x * c)
        b = int(self.y * c)
        if b == 0:
            return a // c
        s = isqrt(b * b * self.D)
        if b < 0:
            s = -s - 1
        # b sqrt D lies strictly inside (s, s+1)
        return (a + s) // c

    def __ceil__(self) -> int:
        return -math.floor(-self)

    def __float__(self) -> float:
        return float(self.x) + float(self.y) * math.sqrt(self.D)

    def __repr__(self):
        return f"QuadNum({self.D}, {self.x!s}, {self.y!s})"

    def __str__(self):
        if self.y == 0:
            return str(self.x)
        ys = "" if abs(self.y) == 1 else f"{abs(self.y)}*"
        body = f"{ys}sqrt({self.D})"
        if self.x == 0:
            return body if self.y > 0 else f"-{body}"
        op = "+" if self.y > 0 else "-"
        return f"{self.x}{op}{body}"


def exact_sign(q) -> int:
    if isinstance(q, QuadNum):
        return q.sign()
    return _sign(q)


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    __str__ = __repr__


INFINITY = _Infinity()


def fractional_linear(g: SL2Matrix, theta):
    """``(a theta + b) / (c theta + d)`` on the extended real line."""
    if theta is INFINITY:
        if g.c == 0:
            return INFINITY
        return Fraction(g.a, g.c)
    den = g.c * theta + g.d
    if den == 0:
        return INFINITY
    return (g.a * theta + g.b) / den


@dataclass(frozen=True)
class QuadOrder:
    """The order Z[alpha*theta] for a root theta of alpha x^2 + beta x + gamma."""

    alpha: int
    beta: int
    gamma: int

    def __post_init__(self):
        if self.alpha <= 0:
            raise InvalidOrder("alpha must be positive")
        if gcd(gcd(self.alpha, self.beta), self.gamma) != 1:
            raise InvalidOrder("coefficients must be coprime")
        disc = self.discriminant
        if disc <= 0 or is_square(disc):
            raise InvalidOrder(f"discriminant {disc} is not a positive non-square")

    @property
    def discriminant(self) -> int:
        return self.beta * self.beta - 4 * self.alpha * self.gamma

    @property
    def conductor_and_field(self) -> tuple[int, int]:
        return squarefree_decompose(self.discriminant)

    def contains(self, q: QuadNum) -> bool:
        """Membership of ``q`` in Z[alpha*theta]."""
        f, D = self.conductor_and_field
        if q.D != D:
            return False
        # alpha*theta = (-beta + f sqrt D) / 2
        n = 2 * q.y / f
        if n.denominator != 1:
            return False
        m = q.x + n * self.beta / 2
        return m.denominator == 1


def theta_of(order: QuadOrder, conjugate: bool = False) -> QuadNum:
    f, D = order.conductor_and_field
    sgn = -1 if conjugate else 1
    return QuadNum(D, Fraction(-order.beta, 2 * order.alpha), Fraction(sgn * f, 2 * order.alpha))


def fixed_points(g: SL2Matrix) -> tuple[QuadNum, QuadNum]:
    """Both roots of ``c t^2 + (d - a) t - b = 0``, larger-``sqrt`` branch first."""
    if g.c == 0:
        raise InfinityFixed("c = 0: infinity is a fixed point")
    disc = g.trace ** 2 - 4
    if disc <= 0 or is_square(disc):
        raise UnipotentOrRational(f"trace {g.trace} gives no irrational fixed points")
    f, D = squarefree_decompose(disc)
    x = Fraction(g.a - g.d, 2 * g.c)
    y = Fraction(f, 2 * g.c)
    return QuadNum(D, x, y), QuadNum(D, x, -y)


# vectors over Q(sqrt D) are plain (deg, rk) tuples

def qchi(v, w):
    return v[1] * w[0] - v[0] * w[1]


def qact(g: SL2Matrix, v):
    return (g.a * v[0] + g.b * v[1], g.c * v[0] + g.d * v[1])


def eigenvalue_below_one(g: SL2Matrix) -> QuadNum:
    n = g.trace
    if n < 3:
        raise NotHyperbolic(f"trace {n} < 3")
    f, D = squarefree_decompose(n * n - 4)
    return QuadNum(D, Fraction(n, 2), Fraction(-f, 2))


@dataclass(frozen=True)
class EigenFrame:
    g: SL2Matrix
    r: QuadNum
    u: tuple
    uprime: tuple
    delta: QuadNum

    @property
    def theta_attract(self) -> QuadNum:
        return self.u[0] / self.u[1]

    @property
    def theta_repel(self) -> QuadNum:
        return self.uprime[0] / self.uprime[1]

    def coords(self, v) -> tuple:
        """Coordinates ``(x, y)`` of ``v = x u + y u'``."""
        # chi(u, v) = y * delta, chi(v, u') = x * delta
        vv = (v.deg, v.rk) if isinstance(v, KVector) else v
        return qchi(vv, self.uprime) / self.delta, qchi(self.u, vv) / self.delta

    def from_coords(self, x, y) -> tuple:
        return (x * self.u[0] + y * self.uprime[0], x * self.u[1] + y * self.uprime[1])


def eigen_frame(g: SL2Matrix, v0: KVector) -> EigenFrame:
    if classify_eigen(g) is not EigenClass.HYPERBOLIC_POSITIVE:
        raise NotHyperbolic(f"{g} is not hyperbolic with positive eigenvalues")
    M = chi(v0, g @ v0)
    if M == 0:
        raise EigenvectorBase(f"{v0} is proportional to an eigenvector of {g}")
    r = eigenvalue_below_one(g)
    rinv = r.conj()
    gap = r - rinv
    v = (v0.deg, v0.rk)
    gv = qact(g, v)
    # spectral projectors: P_r = (g - r^-1)/(r - r^-1), P_{r^-1} = (g - r)/(r^-1 - r)
    u = tuple((gv[i] - rinv * v[i]) / gap for i in range(2))
    uprime = tuple((gv[i] - r * v[i]) / (-gap) for i in range(2))
    delta = qchi(u, uprime)
    frame = EigenFrame(g, r, u, uprime, delta)
    _check_frame(frame, v0, M)
    return frame


def _check_frame(frame: EigenFrame, v0: KVector, M: int) -> None:
    g, r, u, up = frame.g, frame.r, frame.u, frame.uprime
    assert qact(g, u) == (r * u[0], r * u[1])
    assert qact(g, up) == (up[0] / r, up[1] / r)
    assert (u[0] + up[0], u[1] + up[1]) == (v0.deg, v0.rk)
    assert frame.delta * (r.inverse() - r) == M
    assert 0 < r < 1


def halfplane_test(theta, v: KVector) -> bool:
    """``v.deg - theta * v.rk > 0``."""
    return exact_sign(v.deg - theta * v.rk) > 0


# continued fractions

@dataclass(frozen=True)
class ContinuedFraction:
    quotients: list
    preperiod: list
    period: list

    def convergents(self, n: int | None = None):
        p0, q0, p1, q1 = 1, 0, self.quotients[0], 1
        out = [(p1, q1)]
        for a in self.quotients[1 : n]:
            p0, q0, p1, q1 = p1, q1, a * p1 + p0, a * q1 + q0
            out.append((p1, q1))
        return out


def _surd_form(theta: QuadNum) -> tuple[int, int, int]:
    """Write theta as ``(P + sqrt d) / Q`` with ``Q | d - P^2``."""
    c = math.lcm(theta.x.denominator, theta.y.denominator)
    a = int(theta.x * c)
    b = int(theta.y * c)
    if b == 0:
        raise ValueError("continued fraction requested for a rational number")
    if b < 0:
        a, b, c = -a, -b, -c
    d = b * b * theta.D
    P, Q = a, c
    if (d - P * P) % Q:
        P, Q, d = P * abs(Q), Q * abs(Q), d * Q * Q
    return P, Q, d


def _surd_floor(P: int, Q: int, s: int) -> int:
    if Q > 0:
        return (P + s) // Q
    return (-P - s - 1) // (-Q)


def _cf_walk(theta: QuadNum):
    """Yield ``(a, P, Q)`` for successive complete quotients until the period closes."""
    P, Q, d = _surd_form(theta)
    s = isqrt(d)
    seen: dict[tuple[int, int], int] = {}
    states = []
    while (P, Q) not in seen:
        seen[(P, Q)] = len(states)
        a = _surd_floor(P, Q, s)
        states.append((a, P, Q))
        P = a * Q - P
        Q = (d - P * P) // Q
    return states, seen[(P, Q)], d


def continued_fraction(theta: QuadNum, n: int) -> ContinuedFraction:
    if theta.is_rational():
        raise ValueError("theta must be irrational")
    states, start, _ = _cf_walk(theta)
    pre = [a for a, _, _ in states[:start]]
    per = [a for a, _, _ in states[start:]]
    quotients = []
    for i in range(n):
        if i < len(pre):
            quotients.append(pre[i])
        else:
            quotients.append(per[(i - len(pre)) % len(per)])
    return ContinuedFraction(quotients, pre, per)


def fundamental_unit(theta: QuadNum) -> QuadNum:
    """Fundamental unit (> 1) of the multiplier ring of Z + Z theta.

    Read off the period of the continued fraction: the period matrix fixes the
    purely periodic complete quotient, and its eigenvalue there is the unit.
    """
    states, start, d = _cf_walk(theta)
    m = (1, 0, 0, 1)  # running product [[p, p'], [q, q']]
    for a, _, _ in states[start:]:
        ma, mb, mc, md = m
        m = (ma * a + mb, ma, mc * a + md, mc)
    _, P, Q = states[start]
    f, D = squarefree_decompose(d)
    theta_k = QuadNum(D, Fraction(P, Q), Fraction(f, Q))
    eps = m[2] * theta_k + m[3]
    assert eps > 1
    return eps


def unit_below_one(order: QuadOrder) -> QuadNum:
    """Largest norm-one unit of Z[alpha*theta] lying strictly between 0 and 1."""
    theta = theta_of(order)
    eps = fundamental_unit(theta)
    if eps.norm() == -1:
        eps = eps * eps
    base = eps.inverse()
    r = base
    while not order.contains(r):
        r = r * base
    assert r.norm() == 1 and 0 < r < 1
    # raises unless r (Z + Z theta) stays inside Z + Z theta
    matrix_of_unit(order, r)
    return r


def _integer(q: Fraction, what: str) -> int:
    if q.denominator != 1:
        raise NotAUnit(f"{what} = {q} is not an integer")
    return int(q)


def matrix_of_unit(order: QuadOrder, r: QuadNum) -> SL2Matrix:
    """Matrix of multiplication by ``r`` on Z + Z theta in the basis (theta, 1)."""
    theta = theta_of(order)
    if r.D != theta.D or r.norm() != 1 or not (0 < r < 1):
        raise NotAUnit(f"{r} is not a norm-one unit in (0, 1) of Q(sqrt {theta.D})")
    # r = c theta + d, r theta = a theta + b
    c = _integer(r.y / theta.y, "c")
    d = _integer(r.x - c * theta.x, "d")
    rt = r * theta
    a = _integer(rt.y / theta.y, "a")
    b = _integer(rt.x - a * theta.x, "b")
    g = SL2Matrix(a, b, c, d)
    assert fractional_linear(g, theta) == theta
    return g
