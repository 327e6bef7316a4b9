"""Algebras of noncommutative two-tori with real multiplication, at the K-theory level.

Exit status: 0 on success, 2 on invalid input, 1 on an internal failure,
3 when an oracle suite reports a violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys

from .classify import (
    AlphaFlag,
    koszul,
    koszul_dual,
    phase_verdicts,
    profile,
    verdicts,
)
from .construct import ample_sequence, rm_pair
from .errors import ParseError, RmTorusError
from .lattice import KVector, SL2Matrix
from .oracle import SUITES, run_all
from .quadfield import QuadOrder, theta_of
from .serialize import (
    number_to_json,
    orbit_to_json,
    parse_int,
    profile_to_json,
    rational_function_to_json,
    rational_str,
    vector_to_json,
    verdicts_to_json,
)
from .series import coefficients, dual_series, hilbert_series
from .twist import descent_chain, twist_orbit

DEFAULT_HORIZON = 10
SURVEY_COLUMNS = ["N", "M", "degree_one", "quadratic", "koszul", "finitely_generated", "ample-class"]


def parse_ints(text: str, count: int, what: str) -> list[int]:
    parts = text.split(",")
    if len(parts) != count:
        raise ParseError(f"{what} needs {count} comma-separated integers, got {text!r}")
    return [parse_int(p) for p in parts]


def parse_matrix(text: str) -> SL2Matrix:
    return SL2Matrix(*parse_ints(text, 4, "matrix"))


def parse_vector(text: str) -> KVector:
    return KVector(*parse_ints(text, 2, "vector"))


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition(":")
    if not sep:
        n = parse_int(lo)
        return range(n, n + 1)
    return range(parse_int(lo), parse_int(hi) + 1)


def _emit(args, data: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print("\n".join(lines))


def _seq(xs) -> str:
    return ", ".join(str(x) for x in xs)


# subcommands


def cmd_classify(args) -> int:
    p = profile(parse_matrix(args.g), parse_vector(args.v), AlphaFlag(args.alpha))
    data = profile_to_json(p)
    data["admissible"] = p.admissible
    lines = [
        f"g: {p.g}",
        f"v0: {p.v0}",
        f"N: {p.N}",
        f"M: {p.M}",
        f"eigen class: {p.eigen_class.value}",
    ]
    if p.theta_attract is not None:
        lines += [f"theta attract: {p.theta_attract}", f"theta repel: {p.theta_repel}"]
    lines.append(f"hilbert: {_seq(coefficients(p.hilbert(), args.horizon))}")
    if not p.admissible:
        lines.append("admissible: no (needs positive real eigenvalues and M > 0); no verdicts")
        data["hilbert"] = rational_function_to_json(p.hilbert(), args.horizon)
        _emit(args, data, lines)
        return 0
    data.update(verdicts_to_json(p, args.horizon))
    for name, v in verdicts(p).items():
        lines.append(f"{name}: {v.label()}" + (f"  [{v.note}]" if v.note else ""))
    if koszul(p).holds:
        d = koszul_dual(p)
        data["dual"] = profile_to_json(d)
        lines.append(f"dual g: {d.g.a},{d.g.b},{d.g.c},{d.g.d}")
        lines.append(f"dual N: {d.N}, dual M: {d.M}")
    _emit(args, data, lines)
    return 0


def cmd_hilbert(args) -> int:
    f = hilbert_series(parse_int(args.N), parse_int(args.M))
    cs = coefficients(f, args.horizon)
    _emit(args, rational_function_to_json(f, args.horizon), [f"H(t) = ({f.num}) / ({f.den})", f"coefficients: {_seq(cs)}"])
    return 0


def cmd_dual(args) -> int:
    if args.g or args.v:
        if not (args.g and args.v):
            raise ParseError("dual of a profile needs both -g and -v")
        d = koszul_dual(profile(parse_matrix(args.g), parse_vector(args.v)))
        _emit(args, profile_to_json(d), [f"dual g: {d.g}", f"N: {d.N}", f"M: {d.M}"])
        return 0
    if args.N is None or args.M is None:
        raise ParseError("dual needs N M, or -g and -v")
    N, M = parse_int(args.N), parse_int(args.M)
    f = dual_series(hilbert_series(N, M))
    cs = coefficients(f, args.horizon)
    lines = [f"H(-t)^-1 = ({f.num}) / ({f.den})", f"coefficients: {_seq(cs)}"]
    if f == hilbert_series(M - N, M):
        lines.append(f"equals the Hilbert series with N = {M - N}, M = {M}")
    _emit(args, rational_function_to_json(f, args.horizon), lines)
    return 0


def cmd_orbit(args) -> int:
    p = profile(parse_matrix(args.g), parse_vector(args.v))
    orbit = twist_orbit(p, args.horizon)
    lines = [f"chi(F'_{n}, F_{m}) = {orbit.chi[(n, m)]}" for n, m in sorted(orbit.chi)]
    lines += [f"rk(F'_{n}) = {x}" for n, x in enumerate(orbit.rk)]
    _emit(args, orbit_to_json(orbit), lines)
    return 0


def _order(args) -> QuadOrder:
    return QuadOrder(parse_int(args.alpha), parse_int(args.beta), parse_int(args.gamma))


def cmd_descent(args) -> int:
    theta = theta_of(_order(args))
    chain = descent_chain(theta, parse_vector(args.v), parse_int(args.n))
    data = {"theta": number_to_json(theta), "chain": [vector_to_json(w) for w in chain]}
    _emit(args, data, [f"theta = {theta}"] + [str(w) for w in chain])
    return 0


def cmd_construct(args) -> int:
    order = _order(args)
    g, v, p = rm_pair(order, koszul_grade=args.koszul_grade)
    data = profile_to_json(p)
    data["theta"] = number_to_json(theta_of(order))
    data["koszul_grade"] = p.M >= p.N + 2
    lines = [
        f"theta: {theta_of(order)}",
        f"g: {g.a},{g.b},{g.c},{g.d}",
        f"v: {v.deg},{v.rk}",
        f"N: {p.N}",
        f"M: {p.M}",
        f"koszul grade: {'yes' if p.M >= p.N + 2 else 'no'}",
    ]
    _emit(args, data, lines)
    return 0


def cmd_ample_seq(args) -> int:
    order = QuadOrder(parse_int(args.theta_alpha), parse_int(args.theta_beta), parse_int(args.theta_gamma))
    theta = theta_of(order, conjugate=args.conjugate)
    items = ample_sequence(theta, parse_int(args.count))
    data = {
        "theta": number_to_json(theta),
        "items": [{"d": str(it.d), "r": str(it.r), "mu": rational_str(it.mu)} for it in items],
    }
    lines = [f"theta = {theta}"] + [f"({it.d},{it.r})  mu = {rational_str(it.mu)}" for it in items]
    _emit(args, data, lines)
    return 0


def cmd_survey(args) -> int:
    alpha = AlphaFlag(args.alpha)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(SURVEY_COLUMNS)
    for N in parse_range(args.N):
        for M in parse_range(args.M):
            if N < 2 or M <= 0:
                writer.writerow([N, M] + ["n/a"] * 5)
                continue
            v = phase_verdicts(N, M, alpha)
            writer.writerow([N, M] + [v[k].label() for k in ("degree_one", "quadratic", "koszul", "finitely_generated", "ample")])
    return 0


def cmd_oracle(args) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    report = run_all(parse_int(args.entry_bound), suites)
    data = {r.name: {"ok": r.ok, "detail": r.detail} for r in report.results}
    lines = [f"{r.name}: {'ok' if r.ok else 'VIOLATION'} {r.detail}".rstrip() for r in report.results]
    _emit(args, data, lines)
    return 0 if report.ok else 3


# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--horizon", type=parse_int, default=argparse.SUPPRESS, metavar="K", help="series horizon")

    parser = argparse.ArgumentParser(prog="rmtorus", parents=[common], description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("classify", cmd_classify, "verdicts for a profile (g, v0)")
    sp.add_argument("-g", required=True, help="matrix a,b,c,d (row-major)")
    sp.add_argument("-v", required=True, help="base vector deg,rk")
    sp.add_argument("--alpha", choices=[a.value for a in AlphaFlag], default="unknown")

    sp = add("hilbert", cmd_hilbert, "Hilbert series for (N, M)")
    sp.add_argument("N")
    sp.add_argument("M")

    sp = add("dual", cmd_dual, "dual series for (N, M), or the Koszul dual profile")
    sp.add_argument("N", nargs="?")
    sp.add_argument("M", nargs="?")
    sp.add_argument("-g")
    sp.add_argument("-v")

    sp = add("orbit", cmd_orbit, "twist orbit tables")
    sp.add_argument("-g", required=True)
    sp.add_argument("-v", required=True)

    sp = add("descent", cmd_descent, "descent chain in H_theta")
    for name in ("--alpha", "--beta", "--gamma"):
        sp.add_argument(name, required=True)
    sp.add_argument("-v", required=True)
    sp.add_argument("-n", default="5")

    sp = add("construct-rm", cmd_construct, "profile with real multiplication by theta")
    for name in ("--alpha", "--beta", "--gamma"):
        sp.add_argument(name, required=True)
    sp.add_argument("--koszul-grade", action="store_true")

    sp = add("ample-seq", cmd_ample_seq, "ample slope sequence for theta")
    for name in ("--theta-alpha", "--theta-beta", "--theta-gamma"):
        sp.add_argument(name, required=True)
    sp.add_argument("--conjugate", action="store_true", help="use the other root")
    sp.add_argument("--count", default="20")

    sp = add("survey", cmd_survey, "CSV phase table over ranges of N and M")
    sp.add_argument("--N", default="2:6", help="inclusive range lo:hi")
    sp.add_argument("--M", default="1:10", help="inclusive range lo:hi")
    sp.add_argument("--alpha", choices=[a.value for a in AlphaFlag], default="unknown")

    sp = add("oracle", cmd_oracle, "run brute-force oracle suites")
    sp.add_argument("action", choices=["run"])
    sp.add_argument("--suite", choices=("all",) + SUITES, default="all")
    sp.add_argument("--entry-bound", default="3")
    return parser


_NEGATIVE_LIST = re.compile(r"^-\d+(,-?\d+)+$")


def _glue_negative_lists(argv: list[str]) -> list[str]:
    # "-v -1,0" would otherwise read "-1,0" as an option
    out: list[str] = []
    for tok in argv:
        if _NEGATIVE_LIST.match(tok) and out and out[-1].startswith("-") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(_glue_negative_lists(argv))
    args.json = getattr(args, "json", False)
    args.horizon = getattr(args, "horizon", DEFAULT_HORIZON)
    try:
        return args.func(args)
    except RmTorusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
