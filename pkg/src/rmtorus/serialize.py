"""JSON encodings. Integers and rationals travel as decimal strings."""

from __future__ import annotations

import re
from fractions import Fraction

from .classify import AlgebraProfile, AlphaFlag, Verdict, profile, verdicts
from .errors import ParseError
from .lattice import KVector, SL2Matrix
from .poly import BiPoly, Poly
from .quadfield import INFINITY, QuadNum
from .series import RationalFunction, coefficients
from .twist import TwistOrbit

_INT = re.compile(r"^[+-]?\d+$")
_RAT = re.compile(r"^[+-]?\d+/\d+$")


def parse_int(s: str) -> int:
    s = str(s).strip()
    if not _INT.match(s):
        raise ParseError(f"expected an integer, got {s!r}")
    return int(s)


def parse_rational(s: str) -> Fraction:
    s = str(s).strip()
    if _INT.match(s):
        return Fraction(int(s))
    if _RAT.match(s):
        num, den = s.split("/")
        if int(den) == 0:
            raise ParseError(f"zero denominator in {s!r}")
        return Fraction(int(num), int(den))
    raise ParseError(f"expected an integer or p/q rational, got {s!r}")


def rational_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def number_to_json(x):
    if isinstance(x, QuadNum):
        return {"D": x.D, "x": rational_str(x.x), "y": rational_str(x.y)}
    if x is INFINITY:
        return "infinity"
    return rational_str(x)


def number_from_json(obj):
    if isinstance(obj, dict):
        return QuadNum(int(obj["D"]), parse_rational(obj["x"]), parse_rational(obj["y"]))
    if obj == "infinity":
        return INFINITY
    return parse_rational(obj)


def matrix_to_json(g: SL2Matrix) -> list:
    return [[str(g.a), str(g.b)], [str(g.c), str(g.d)]]


def matrix_from_json(obj) -> SL2Matrix:
    (a, b), (c, d) = obj
    return SL2Matrix(parse_int(a), parse_int(b), parse_int(c), parse_int(d))


def vector_to_json(v: KVector) -> list:
    return [str(v.deg), str(v.rk)]


def vector_from_json(obj) -> KVector:
    deg, rk = obj
    return KVector(parse_int(deg), parse_int(rk))


def poly_to_json(p: Poly) -> dict:
    return {str(k): number_to_json(c) for k, c in enumerate(p.coeffs) if c != 0}


def poly_from_json(obj: dict) -> Poly:
    cs: list = []
    for k, c in obj.items():
        k = parse_int(k)
        cs.extend([0] * (k + 1 - len(cs)))
        cs[k] = number_from_json(c)
    return Poly(cs)


def bipoly_to_json(p: BiPoly) -> dict:
    return {f"{i},{j}": number_to_json(c) for (i, j), c in sorted(p.terms.items())}


def bipoly_from_json(obj: dict) -> BiPoly:
    terms = {}
    for key, c in obj.items():
        i, j = key.split(",")
        terms[(parse_int(i), parse_int(j))] = number_from_json(c)
    return BiPoly(terms)


def rational_function_to_json(f: RationalFunction, horizon: int | None = None) -> dict:
    out = {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}
    if horizon is not None:
        out["coefficients"] = [number_to_json(c) for c in coefficients(f, horizon)]
    return out


def rational_function_from_json(obj: dict) -> RationalFunction:
    return RationalFunction(poly_from_json(obj["num"]), poly_from_json(obj["den"]))


def verdict_to_json(v: Verdict) -> str:
    return v.label()


def verdicts_to_json(p: AlgebraProfile, horizon: int = 10) -> dict:
    out = {name: verdict_to_json(v) for name, v in verdicts(p).items()}
    out["N"] = p.N
    out["M"] = p.M
    out["hilbert"] = rational_function_to_json(p.hilbert(), horizon)
    return out


def profile_to_json(p: AlgebraProfile) -> dict:
    out = {
        "g": matrix_to_json(p.g),
        "v0": vector_to_json(p.v0),
        "alpha": p.alpha.value,
        "N": p.N,
        "M": p.M,
        "eigen_class": p.eigen_class.value,
    }
    if p.theta_attract is not None:
        out["theta_attract"] = number_to_json(p.theta_attract)
        out["theta_repel"] = number_to_json(p.theta_repel)
    return out


def profile_from_json(obj: dict) -> AlgebraProfile:
    p = profile(matrix_from_json(obj["g"]), vector_from_json(obj["v0"]), AlphaFlag(obj.get("alpha", "unknown")))
    if "N" in obj and int(obj["N"]) != p.N or "M" in obj and int(obj["M"]) != p.M:
        raise ParseError("stored N, M do not match the recomputed profile")
    return p


def orbit_to_json(orbit: TwistOrbit) -> dict:
    return {
        "chi": {f"{n},{m}": str(v) for (n, m), v in sorted(orbit.chi.items())},
        "rk": [number_to_json(x) for x in orbit.rk],
    }
