"""Dense univariate and sparse bivariate polynomials over an exact field.

Coefficients may be ``int``, ``Fraction`` or :class:`~rmtorus.quadfield.QuadNum`;
only field operations are used, so the same code serves Q and Q(sqrt D).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest


def _norm_coeff(c):
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    return c


def _trim(cs: list) -> list:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


class Poly:
    """Polynomial in one variable, coefficients stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim([_norm_coeff(c) for c in coeffs])

    @classmethod
    def constant(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def lead(self):
        return self.coeffs[-1]

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        result = Poly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, other: Poly):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.lead()
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + other.degree] / lead
            q[k] = c
            if c != 0:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return Poly(q), Poly(rem[: other.degree] if other.degree > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        return self * (1 / self.lead()) if self.coeffs else self

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale_var(self, k) -> Poly:
        """``p(k*t)``."""
        out, pw = [], 1
        for c in self.coeffs:
            out.append(c * pw)
            pw = pw * k
        return Poly(out)

    def shift_down(self) -> Poly:
        """``p(t)/t``; requires zero constant term."""
        if self.coeffs and self.coeffs[0] != 0:
            raise ValueError("constant term is not zero")
        return Poly(self.coeffs[1:])

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            else:
                cs = str(c)
                if mono and not isinstance(c, Fraction):
                    cs = f"({cs})"
                terms.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(terms).replace("+ -", "- ")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


# bivariate


class BiPoly:
    """Sparse polynomial in ``(t, u)``: ``{(i, j): coeff}`` for ``t^i u^j``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: _norm_coeff(v) for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def t(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def u(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, c) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def from_t(cls, p: Poly) -> BiPoly:
        return cls({(i, 0): c for i, c in enumerate(p.coeffs)})

    @classmethod
    def from_u(cls, p: Poly) -> BiPoly:
        return cls({(0, j): c for j, c in enumerate(p.coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    def __getitem__(self, key):
        return self.terms.get(key, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly.constant(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly.constant(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return BiPoly.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            return BiPoly({k: v * other for k, v in self.terms.items()})
        out: dict = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in other.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def deg_u(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def u_coeffs(self) -> list[Poly]:
        """Coefficients in ``u`` as polynomials in ``t``."""
        n = self.deg_u()
        rows: list[list] = [[] for _ in range(n + 1)]
        for (i, j), c in self.terms.items():
            row = rows[j]
            if len(row) <= i:
                row.extend([0] * (i + 1 - len(row)))
            row[i] = c
        return [Poly(r) for r in rows]

    @classmethod
    def from_u_coeffs(cls, cs: list[Poly]) -> BiPoly:
        out = {}
        for j, p in enumerate(cs):
            for i, c in enumerate(p.coeffs):
                out[(i, j)] = c
        return cls(out)

    def __repr__(self):
        items = sorted(self.terms.items())
        return "BiPoly({" + ", ".join(f"{k}: {v}" for k, v in items) + "})"


def _content(p: BiPoly) -> Poly:
    g = Poly()
    for c in p.u_coeffs():
        g = poly_gcd(g, c) if not g.is_zero() else c.monic()
    return g


def _primitive(p: BiPoly) -> BiPoly:
    if p.is_zero():
        return p
    cont = _content(p)
    return BiPoly.from_u_coeffs([c // cont for c in p.u_coeffs()])


def _pseudo_rem(a: BiPoly, b: BiPoly) -> BiPoly:
    db = b.deg_u()
    lb = BiPoly.from_t(b.u_coeffs()[db])
    r = a
    while not r.is_zero() and r.deg_u() >= db:
        dr = r.deg_u()
        lr = BiPoly.from_t(r.u_coeffs()[dr])
        r = lb * r - lr * BiPoly({(0, dr - db): 1}) * b
    return r


def bipoly_gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """Greatest common divisor in Q[t, u], normalized by the primitive-part PRS."""
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    cont = poly_gcd(_content(a), _content(b))
    a, b = _primitive(a), _primitive(b)
    if a.deg_u() < b.deg_u():
        a, b = b, a
    while not b.is_zero():
        r = _pseudo_rem(a, b)
        a, b = b, _primitive(r)
    if a.deg_u() == 0:
        return BiPoly.from_t(cont)
    return a * BiPoly.from_t(cont)


def bipoly_divexact(a: BiPoly, b: BiPoly) -> BiPoly:
    """Exact division ``a / b`` in Q[t, u] (raises if it does not divide)."""
    # long division in u over Q(t), with t-polynomial exact quotients
    q = BiPoly()
    r = a
    db = b.deg_u()
    lb = b.u_coeffs()[db]
    while not r.is_zero():
        dr = r.deg_u()
        if dr < db:
            raise ValueError("division is not exact")
        lr = r.u_coeffs()[dr]
        c, rem = divmod(lr, lb)
        if not rem.is_zero():
            raise ValueError("division is not exact")
        term = BiPoly.from_t(c) * BiPoly({(0, dr - db): 1})
        q = q + term
        r = r - term * b
    return q
