"""Exact rational functions and the closed-form generating series.

``RationalFunction`` is kept reduced with denominator constant term 1, so its
Taylor coefficients follow from the linear recurrence the denominator defines.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import EigenvalueMismatch, ZeroConstantTerm
from .poly import BiPoly, Poly, bipoly_divexact, bipoly_gcd, poly_gcd


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce: bool = True):
        num = num if isinstance(num, Poly) else Poly(num) if isinstance(num, (list, tuple)) else Poly.constant(num)
        if den is None:
            den = Poly.constant(1)
        elif not isinstance(den, Poly):
            den = Poly(den) if isinstance(den, (list, tuple)) else Poly.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce:
            g = poly_gcd(num, den) if not num.is_zero() else den.monic()
            num, den = num // g, den // g
        c0 = den[0]
        if c0 == 0:
            raise ZeroConstantTerm("denominator has zero constant term; no power series")
        if c0 != 1:
            inv = 1 / c0
            num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @classmethod
    def t(cls) -> RationalFunction:
        return cls(Poly.monomial(1))

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def _lift(self, other):
        return other if isinstance(other, RationalFunction) else RationalFunction(other)

    def __add__(self, other):
        o = self._lift(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def scale_var(self, k) -> RationalFunction:
        """``f(k*t)``."""
        return RationalFunction(self.num.scale_var(k), self.den.scale_var(k))

    def divide_by_t(self) -> RationalFunction:
        return RationalFunction(self.num.shift_down(), self.den)

    def value_at_zero(self):
        return self.num[0]

    def coefficients(self, n: int) -> list:
        return coefficients(self, n)

    def __repr__(self):
        return f"RationalFunction(({self.num}) / ({self.den}))"

    __str__ = __repr__


def coefficients(f: RationalFunction, n: int) -> list:
    """First ``n + 1`` Taylor coefficients, by the denominator recurrence."""
    den = f.den.coeffs
    out = []
    for k in range(n + 1):
        acc = f.num[k]
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(acc)
    return [_tidy(c) for c in out]


def _tidy(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def hilbert_series(N: int, M: int) -> RationalFunction:
    """``(1 + (M-N) t + t^2) / (1 - N t + t^2)``, i.e. ``1 + M t / (1 - N t + t^2)``."""
    return RationalFunction(Poly([1, M - N, 1]), Poly([1, -N, 1]))


def orbit_series(N: int, M: int) -> RationalFunction:
    """``M t / (1 - N t + t^2)``: generating function of chi(v, g^n v)."""
    return RationalFunction(Poly([0, M]), Poly([1, -N, 1]))


def dual_series(f: RationalFunction) -> RationalFunction:
    """``f(-t)^{-1}``."""
    if f.value_at_zero() == 0:
        raise ZeroConstantTerm("f(0) = 0 has no power-series inverse")
    return f.scale_var(-1).inverse()


def dual_seed(f: RationalFunction) -> RationalFunction:
    """``(f(-t)^{-1} - 1) / t``."""
    return (dual_series(f) - 1).divide_by_t()


def positivity_scan(f: RationalFunction, horizon: int):
    """First index in ``1..horizon`` whose coefficient is <= 0, else None."""
    cs = coefficients(f, horizon)
    for k in range(1, horizon + 1):
        if not cs[k] > 0:
            return k
    return None


# bivariate


class BiRationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly, den: BiPoly, reduce: bool = True):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce and not num.is_zero():
            g = bipoly_gcd(num, den)
            num, den = bipoly_divexact(num, g), bipoly_divexact(den, g)
        elif num.is_zero():
            den = BiPoly.constant(1)
        c0 = den[(0, 0)]
        if c0 == 0:
            raise ZeroConstantTerm("denominator has zero constant term")
        if c0 != 1:
            num, den = num * (1 / c0), den * (1 / c0)
        self.num = num
        self.den = den

    def __eq__(self, other):
        if not isinstance(other, BiRationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def expand(self, order_t: int, order_u: int) -> list[list]:
        """Coefficient array ``c[i][j]`` of ``t^i u^j`` for ``i <= order_t, j <= order_u``."""
        den = [(k, v) for k, v in self.den.terms.items() if k != (0, 0)]
        c = [[Fraction(0)] * (order_u + 1) for _ in range(order_t + 1)]
        for i in range(order_t + 1):
            for j in range(order_u + 1):
                acc = self.num[(i, j)]
                for (a, b), d in den:
                    if a <= i and b <= j:
                        acc = acc - d * c[i - a][j - b]
                c[i][j] = acc
        return [[_tidy(x) for x in row] for row in c]

    def __repr__(self):
        return f"BiRationalFunction({self.num!r} / {self.den!r})"


def twist_series_F(N: int, M: int) -> BiRationalFunction:
    """``M (1 + t u) / ((1 - N u + u^2)(1 - (M-N) t + t^2))``."""
    t, u = BiPoly.t(), BiPoly.u()
    num = M * (1 + t * u)
    den = (1 - N * u + u * u) * (1 - (M - N) * t + t * t)
    return BiRationalFunction(num, den)


def twist_series_R(N: int, M: int, r) -> RationalFunction:
    """``(1 + r^2 t) / (1 - (M-N) r t + r^2 t^2)`` for the eigenvalue ``r`` of a trace-N matrix."""
    if isinstance(r, int):
        r = Fraction(r)
    if r + 1 / r != N:
        raise EigenvalueMismatch(f"r + 1/r = {r + 1 / r} differs from N = {N}")
    r2 = r * r
    return RationalFunction(Poly([1, r2]), Poly([1, -(M - N) * r, r2]))
