"""Integer SL2 arithmetic on (degree, rank) vectors and the Euler form.

Vectors are columns ``(deg, rk)``; matrices act on the left.  The Euler form is
``chi(v, w) = -(v.deg * w.rk - v.rk * w.deg)``, oriented so that
``chi((0, 1), (d, 1)) == d``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .errors import NotPrimitive, NotSL2


@dataclass(frozen=True)
class KVector:
    deg: int
    rk: int

    def __iter__(self):
        return iter((self.deg, self.rk))

    def __neg__(self) -> KVector:
        return KVector(-self.deg, -self.rk)

    def __add__(self, other: KVector) -> KVector:
        return KVector(self.deg + other.deg, self.rk + other.rk)

    def __sub__(self, other: KVector) -> KVector:
        return KVector(self.deg - other.deg, self.rk - other.rk)

    def __mul__(self, k: int) -> KVector:
        return KVector(k * self.deg, k * self.rk)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.deg == 0 and self.rk == 0

    def __str__(self) -> str:
        return f"({self.deg},{self.rk})"


def is_primitive(v: KVector) -> bool:
    return gcd(v.deg, v.rk) == 1


@dataclass(frozen=True)
class SL2Matrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for x in (self.a, self.b, self.c, self.d):
            if not isinstance(x, int) or isinstance(x, bool):
                raise NotSL2(f"entries must be integers, got {x!r}")
        if self.a * self.d - self.b * self.c != 1:
            raise NotSL2(
                f"determinant of [[{self.a},{self.b}],[{self.c},{self.d}]] "
                f"is {self.a * self.d - self.b * self.c}, not 1"
            )

    @classmethod
    def from_rows(cls, rows) -> SL2Matrix:
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def identity(cls) -> SL2Matrix:
        return cls(1, 0, 0, 1)

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def __matmul__(self, other):
        if isinstance(other, SL2Matrix):
            return compose(self, other)
        if isinstance(other, KVector):
            return act(self, other)
        return NotImplemented

    def __pow__(self, n: int) -> SL2Matrix:
        base = self if n >= 0 else inverse(self)
        n = abs(n)
        result = SL2Matrix.identity()
        while n:
            if n & 1:
                result = compose(result, base)
            base = compose(base, base)
            n >>= 1
        return result

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def chi(v: KVector, w: KVector) -> int:
    return -(v.deg * w.rk - v.rk * w.deg)


def act(g: SL2Matrix, v: KVector) -> KVector:
    return KVector(g.a * v.deg + g.b * v.rk, g.c * v.deg + g.d * v.rk)


def compose(g: SL2Matrix, h: SL2Matrix) -> SL2Matrix:
    return SL2Matrix(
        g.a * h.a + g.b * h.c,
        g.a * h.b + g.b * h.d,
        g.c * h.a + g.d * h.c,
        g.c * h.b + g.d * h.d,
    )


def inverse(g: SL2Matrix) -> SL2Matrix:
    return SL2Matrix(g.d, -g.b, -g.c, g.a)


def trace(g: SL2Matrix) -> int:
    return g.a + g.d


class EigenClass(enum.Enum):
    IDENTITY = "identity"
    UNIPOTENT_POSITIVE = "unipotent-positive"
    HYPERBOLIC_POSITIVE = "hyperbolic-positive"
    OTHER = "other"


def classify_eigen(g: SL2Matrix) -> EigenClass:
    """Sort ``g`` by its eigenvalues, which det = 1 ties to the trace alone.

    Trace >= 3 gives two distinct real eigenvalues r > 1 > 1/r > 0; trace 2 is
    the identity or a nontrivial unipotent; everything else has eigenvalues
    that are not both real and positive.
    """
    n = g.trace
    if n >= 3:
        return EigenClass.HYPERBOLIC_POSITIVE
    if n == 2:
        if g == SL2Matrix.identity():
            return EigenClass.IDENTITY
        return EigenClass.UNIPOTENT_POSITIVE
    return EigenClass.OTHER


def has_positive_eigenvalues(g: SL2Matrix) -> bool:
    return g.trace >= 2


def cube_identity_check(g: SL2Matrix) -> bool:
    # g^3 - (N+1) g^2 + (N+1) g - I == 0, entrywise
    n = g.trace
    g2 = compose(g, g)
    g3 = compose(g2, g)
    ident = SL2Matrix.identity()
    for e3, e2, e1, e0 in zip(_entries(g3), _entries(g2), _entries(g), _entries(ident)):
        if e3 - (n + 1) * e2 + (n + 1) * e1 - e0 != 0:
            return False
    return True


def _entries(g: SL2Matrix) -> tuple[int, int, int, int]:
    return (g.a, g.b, g.c, g.d)


def _require_primitive(v0: KVector) -> None:
    if not is_primitive(v0):
        raise NotPrimitive(f"vector {v0} is not primitive")


def left_twist_matrix(v0: KVector) -> SL2Matrix:
    """Matrix of ``v -> v - chi(v0, v) v0``, the class of the shifted left twist."""
    _require_primitive(v0)
    # chi(v0, v) = v0.rk * v.deg - v0.deg * v.rk
    p, q = v0.rk, -v0.deg
    return SL2Matrix(
        1 - v0.deg * p, -v0.deg * q,
        -v0.rk * p, 1 - v0.rk * q,
    )


def right_twist_matrix(v0: KVector) -> SL2Matrix:
    """Matrix of ``v -> chi(v, v0) v0 - v``."""
    _require_primitive(v0)
    # chi(v, v0) = v.rk * v0.deg - v.deg * v0.rk
    p, q = -v0.rk, v0.deg
    return SL2Matrix(
        v0.deg * p - 1, v0.deg * q,
        v0.rk * p, v0.rk * q - 1,
    )
