"""Brute-force cross-checks that share no code paths with the engines.

Matrices here are plain 4-tuples ``(a, b, c, d)``, vectors plain pairs, and
power series plain lists expanded by long division. Engine results are only
ever compared against these, never reused to build them.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .classify import AlgebraProfile, eigenlem_report, koszul_dual_matrix, realizing_profile, verprop_report
from .lattice import KVector, SL2Matrix, cube_identity_check
from .quadfield import QuadNum, QuadOrder, unit_below_one
from .series import coefficients, orbit_series, twist_series_F, twist_series_R
from .twist import koszul_dual_dims

# 2x2 integer matrices as tuples


def _det(m) -> int:
    a, b, c, d = m
    return a * d - b * c


def _mul(m, n):
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _apply(m, v):
    a, b, c, d = m
    return (a * v[0] + b * v[1], c * v[0] + d * v[1])


def _euler(v, w) -> int:
    # minus the determinant with v, w as columns
    return -(v[0] * w[1] - v[1] * w[0])


def _tuple(g: SL2Matrix):
    return (g.a, g.b, g.c, g.d)


# power series as lists


def _series_div(num: list, den: list, n: int) -> list:
    """First ``n + 1`` coefficients of ``num / den`` by long division."""
    rem = [Fraction(x) for x in num] + [Fraction(0)] * (n + 1)
    out = []
    for k in range(n + 1):
        q = rem[k] / den[0]
        out.append(q)
        for j, c in enumerate(den):
            if k + j < len(rem):
                rem[k + j] -= q * c
    return out


def _series_div_general(num: list, den: list, n: int) -> list:
    """Same as ``_series_div`` but for coefficients in any field (QuadNum)."""
    rem = [Fraction(x) if isinstance(x, int) else x for x in num] + [Fraction(0)] * (n + 1)
    out = []
    for k in range(n + 1):
        q = rem[k] / den[0]
        out.append(q)
        for j, c in enumerate(den):
            if k + j < len(rem):
                rem[k + j] = rem[k + j] - q * c
    return out


def _hilbert(N: int, M: int, n: int) -> list:
    return _series_div([1, M - N, 1], [1, -N, 1], n)


def _realize(N: int, M: int):
    """Some ``(g, v)`` with trace N and ``chi(v, g v) == M``, or None."""
    if M == 0:
        return ((1, 0, 0, 1), (0, 1)) if N == 2 else ((-1, 0, 0, -1), (0, 1)) if N == -2 else None
    for a in range(abs(M)):
        d = N - a
        if (a * d - 1) % M == 0:
            return (a, M, (a * d - 1) // M, d), (0, 1)
    return None


# suites


def series_vs_recurrence(N: int, M: int, horizon: int) -> bool:
    """``M t / (1 - N t + t^2)`` three ways, plus the engine expansion."""
    division = _series_div([0, M], [1, -N, 1], horizon)
    rec = [0, M]
    while len(rec) <= horizon:
        rec.append(N * rec[-1] - rec[-2])
    rec = rec[: horizon + 1]
    if division != rec:
        return False
    if coefficients(orbit_series(N, M), horizon) != rec:
        return False
    pair = _realize(N, M)
    if pair is not None:
        g, v = pair
        assert _det(g) == 1
        w, powers = v, []
        for _ in range(horizon + 1):
            powers.append(_euler(v, w))
            w = _apply(g, w)
        if powers != rec:
            return False
    return True


def _bivariate_F(N: int, M: int, order: int) -> list[list]:
    """``c[i][j]`` of ``t^i u^j`` in ``M (1 + t u) / ((1 - N u + u^2)(1 - (M-N) t + t^2))``."""
    a = _series_div([1], [1, -N, 1], order + 1)
    b = _series_div([1], [1, -(M - N), 1], order + 1)
    c = [[M * b[i] * a[j] for j in range(order + 2)] for i in range(order + 2)]
    for i in range(1, order + 2):
        for j in range(1, order + 2):
            c[i][j] += M * b[i - 1] * a[j - 1]
    return c


def _squarefree(n: int) -> tuple[int, int]:
    f, D = 1, n
    for p in range(2, math.isqrt(n) + 1):
        while D % (p * p) == 0:
            D //= p * p
            f *= p
    return f, D


def _quad_eigenvalue(N: int):
    if N == 2:
        return Fraction(1)
    f, D = _squarefree(N * N - 4)
    return QuadNum(D, Fraction(N, 2), Fraction(-f, 2))


def bivariate_identity_check(N: int, M: int, order: int) -> bool:
    """``(u + t) F = H(u) (1 + t F0(t)) - 1`` up to total degree ``order``, and ``R(t)(1+t) = 1/H(-r t)``."""
    F = _bivariate_F(N, M, order)
    H = _hilbert(N, M, order + 1)
    Hneg = [h * (-1) ** k for k, h in enumerate(H)]
    inv = _series_div([1], Hneg, order + 1)
    F0 = inv[1:]  # (1/H(-t) - 1) / t
    for i in range(order + 1):
        for j in range(order + 1 - i):
            lhs = (F[i][j - 1] if j >= 1 else 0) + (F[i - 1][j] if i >= 1 else 0)
            rhs = H[j] * (1 if i == 0 else F0[i - 1]) - (1 if (i, j) == (0, 0) else 0)
            if lhs != rhs:
                return False
    engine = twist_series_F(N, M).expand(order, order)
    if any(engine[i][j] != F[i][j] for i in range(order + 1) for j in range(order + 1)):
        return False
    if N < 2:
        return True
    r = _quad_eigenvalue(N)
    assert r + 1 / r == N
    r2 = r * r
    R = _series_div_general([1, r2], [1, -(M - N) * r, r2], order)
    lhs = [R[0]] + [R[k] + R[k - 1] for k in range(1, order + 1)]
    Hr, pw = [], 1
    for k in range(order + 1):
        Hr.append(H[k] * pw)
        pw = pw * (-r)
    rhs = _series_div_general([1], Hr, order)
    if any(x != y for x, y in zip(lhs, rhs)):
        return False
    return all(x == y for x, y in zip(coefficients(twist_series_R(N, M, r), order), R))


def _matrices(bound: int):
    rng = range(-bound, bound + 1)
    for m in itertools.product(rng, repeat=4):
        if _det(m) == 1:
            yield m


def _vectors(bound: int):
    rng = range(-bound, bound + 1)
    for v in itertools.product(rng, repeat=2):
        if v != (0, 0):
            yield v


def exhaustive_eigenlem(entry_bound: int, vec_bound: int, horizon: int) -> list:
    """Inputs where condition (ii) and the positivity scan (or the engine) disagree."""
    violations = []
    for g in _matrices(entry_bound):
        tr = g[0] + g[3]
        G = SL2Matrix(*g)
        for v in _vectors(vec_bound):
            cond_ii = tr >= 2 and _euler(v, _apply(g, v)) > 0
            w, positive = v, True
            for _ in range(horizon):
                w = _apply(g, w)
                if _euler(v, w) <= 0:
                    positive = False
                    break
            if cond_ii != positive:
                violations.append((g, v, "scan"))
                continue
            rep = eigenlem_report(G, KVector(*v), horizon)
            if rep.condition_ii != cond_ii or rep.condition_i_prime != positive:
                violations.append((g, v, "engine"))
    return violations


def dual_matrix_check(samples: list[AlgebraProfile], horizon: int = 20) -> bool:
    """Koszul dual matrix by hand, its trace and chi, and the dual dimensions."""
    for p in samples:
        v0 = (p.v0.deg, p.v0.rk)
        # v -> chi(v, v0) v0 - v on the basis vectors gives the columns
        c1 = tuple(_euler((1, 0), v0) * x - e for x, e in zip(v0, (1, 0)))
        c2 = tuple(_euler((0, 1), v0) * x - e for x, e in zip(v0, (0, 1)))
        rho = (c1[0], c2[0], c1[1], c2[1])
        a, b, c, d = _tuple(p.g)
        gd = _mul(rho, (d, -b, -c, a))
        if _det(gd) != 1 or gd != _tuple(koszul_dual_matrix(p.g, p.v0)):
            return False
        if gd[0] + gd[3] != p.M - p.N or _euler(v0, _apply(gd, v0)) != p.M:
            return False
        H = _hilbert(p.N, p.M, horizon)
        dual = _series_div([1], [h * (-1) ** k for k, h in enumerate(H)], horizon)
        if koszul_dual_dims(p, horizon) != dual:
            return False
    return True


def brute_unit_below_one(order: QuadOrder, bound: int = 10**5):
    """Norm-one unit of ``Z[alpha theta]`` in ``(0, 1)`` closest to 1, by Pell search.

    ``m + n w`` with ``w = alpha theta`` has norm ``m^2 - beta m n + alpha gamma n^2``;
    for each ``n >= 1`` this is 1 iff ``disc n^2 + 4`` is a square.
    """
    disc = order.discriminant
    for n in range(1, bound + 1):
        s2 = disc * n * n + 4
        s = math.isqrt(s2)
        if s * s != s2:
            continue
        f, D = _squarefree(disc)
        w = QuadNum(D, Fraction(-order.beta, 2), Fraction(f, 2))
        for m2 in (order.beta * n + s, order.beta * n - s):
            if m2 % 2:
                continue
            eps = m2 // 2 + n * w
            if eps > 1:
                return 1 / eps
    return None


def random_words(count: int, seed: int = 0, max_len: int = 24) -> list[tuple]:
    """Products of ``S``, ``T`` and ``T^-1`` of random length."""
    gens = [(0, -1, 1, 0), (1, 1, 0, 1), (1, -1, 0, 1)]
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m = (1, 0, 0, 1)
        for _ in range(rng.randint(1, max_len)):
            m = _mul(m, rng.choice(gens))
        out.append(m)
    return out


def cube_identity_oracle(count: int = 1000, seed: int = 0) -> bool:
    for g in random_words(count, seed):
        N = g[0] + g[3]
        g2 = _mul(g, g)
        g3 = _mul(g2, g)
        total = tuple(x - (N + 1) * y + (N + 1) * z - w for x, y, z, w in zip(g3, g2, g, (1, 0, 0, 1)))
        if total != (0, 0, 0, 0) or not cube_identity_check(SL2Matrix(*g)):
            return False
    return True


def verprop_scan(entry_bound: int = 3, vec_bound: int = 3, horizon: int = 20) -> list:
    """Inputs in the small box where the four equivalent conditions disagree."""
    bad = []
    for g in _matrices(entry_bound):
        if g[0] + g[3] < 2 or g == (1, 0, 0, 1):
            continue
        G = SL2Matrix(*g)
        for v in _vectors(vec_bound):
            if _euler(v, _apply(g, v)) <= 0:
                continue
            if not verprop_report(G, KVector(*v), horizon).consistent:
                bad.append((g, v))
    return bad


DEFAULT_ORDERS = [
    (1, 0, -2),
    (1, -1, -1),
    (1, 0, -3),
    (1, 0, -5),
    (2, -2, -1),
    (1, 0, -6),
    (1, 0, -7),
    (1, -1, -3),
    (3, 1, -1),
    (1, 0, -13),
]


@dataclass
class OracleResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class OracleReport:
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)


SUITES = ("series", "bivariate", "eigenlem", "dual", "units", "cube", "verprop")


def run_suite(name: str, entry_bound: int = 3) -> OracleResult:
    if name == "series":
        bad = [(N, M) for N in range(-5, 11) for M in range(-5, 16) if not series_vs_recurrence(N, M, 20)]
        return OracleResult(name, not bad, f"{len(bad)} disagreements" if bad else "")
    if name == "bivariate":
        bad = [(N, M) for N in range(2, 11) for M in range(1, 16) if not bivariate_identity_check(N, M, 10)]
        return OracleResult(name, not bad, f"failing (N, M): {bad}" if bad else "")
    if name == "eigenlem":
        bad = exhaustive_eigenlem(entry_bound, 3, 40)
        return OracleResult(name, not bad, f"{len(bad)} violations, first {bad[:3]}" if bad else "")
    if name == "dual":
        from .construct import rm_pair

        samples = [rm_pair(QuadOrder(*o), koszul_grade=True).profile for o in DEFAULT_ORDERS]
        samples.append(realizing_profile(2, 4))
        return OracleResult(name, dual_matrix_check(samples))
    if name == "units":
        bad = [o for o in DEFAULT_ORDERS if unit_below_one(QuadOrder(*o)) != brute_unit_below_one(QuadOrder(*o))]
        return OracleResult(name, not bad, f"mismatched orders: {bad}" if bad else "")
    if name == "cube":
        return OracleResult(name, cube_identity_oracle(1000))
    if name == "verprop":
        bad = verprop_scan(min(entry_bound, 3))
        return OracleResult(name, not bad, f"inconsistent: {bad[:3]}" if bad else "")
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")


def run_all(entry_bound: int = 3, suites=SUITES) -> OracleReport:
    return OracleReport([run_suite(s, entry_bound) for s in suites])
