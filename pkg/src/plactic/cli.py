"""Command-line interface.

Exit codes: 0 for success (or a conjecture sweep that holds), 1 when a
sweep finds a counterexample, 2 for usage errors, budget violations, and
interrupted (incomplete) sweeps.
"""

from __future__ import annotations

import argparse
import json
import sys

from .centralizer import centralizer_words, count_centralizer_words, in_centralizer
from .enumeration import expand_binomial
from .errors import PlacticError
from .harness import (
    SweepConfig,
    SweepReport,
    VERDICT_COUNTEREXAMPLE,
    VERDICT_HOLDS,
    check_coefficients,
    check_max_ri,
    check_rc,
    check_rc_sweep,
    check_stability,
)
from .rsk import p_tableau
from .tableau import format_tableau, format_word, parse_word


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON object instead of text")

    parser = argparse.ArgumentParser(
        prog="plactic",
        description="Insertion tableaux, centralizers of the plactic monoid, "
                    "exact counts, and conjecture sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ptab", parents=[common], help="print the insertion tableau of a word")
    p.add_argument("word", help="comma-separated letters, or bare digits like 212")

    p = sub.add_parser("commutes", parents=[common], help="does w commute with u in the plactic monoid")
    p.add_argument("u")
    p.add_argument("w")

    p = sub.add_parser("centralizer", parents=[common],
                       help="list the centralizer words of a given length and alphabet")
    p.add_argument("u")
    p.add_argument("--len", type=int, required=True, help="word length n")
    p.add_argument("--max", type=int, required=True, help="alphabet bound m")

    p = sub.add_parser("count", parents=[common], help="count centralizer words")
    p.add_argument("u")
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--max", type=int, required=True)

    p = sub.add_parser("expand", parents=[common],
                       help="binomial-basis expansion of m -> c_{n,m}(u)")
    p.add_argument("u")
    p.add_argument("--len", type=int, required=True)

    p = sub.add_parser("conjecture", parents=[common], help="run a conjecture sweep")
    p.add_argument("which", choices=("maxri", "stability", "coeffs", "rc"))
    p.add_argument("--u", default=None, help="fixed u (required for stability; optional for rc)")
    p.add_argument("--m", type=int, default=None, help="threshold for rc (default: max of u)")
    p.add_argument("--u-alphabet", type=int, default=4)
    p.add_argument("--u-length", type=int, default=4)
    p.add_argument("--u-sum", type=int, default=None,
                   help="keep only u with max(u) + |u| <= this bound")
    p.add_argument("--w-alphabet", type=int, default=4)
    p.add_argument("--w-length", type=int, default=4)
    p.add_argument("--k-bound", type=int, default=4)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--n-max", type=int, default=8, help="for coeffs")
    return parser


def _print_report(report: SweepReport, as_json: bool):
    if as_json:
        print(report.to_json())
        return
    print(f"conjecture: {report.conjecture}")
    print(f"verdict: {report.verdict}")
    print(f"checked: {report.checked}")
    for key in sorted(report.observed):
        print(f"{key}: {report.observed[key]}")
    for cx in report.counterexamples:
        print(f"counterexample: u=[{format_word(tuple(cx['u']))}] "
              f"w=[{format_word(tuple(cx['w']))}] {cx['detail']}")
    print(f"elapsed_ms: {report.elapsed_ms}")


def _report_exit(report: SweepReport) -> int:
    if report.verdict == VERDICT_HOLDS:
        return 0
    if report.verdict == VERDICT_COUNTEREXAMPLE:
        return 1
    return 2


def _run_conjecture(args) -> int:
    cfg = SweepConfig(
        conjecture=args.which,
        u_alphabet=args.u_alphabet,
        u_length=args.u_length,
        u_sum_bound=args.u_sum,
        w_alphabet=args.w_alphabet,
        w_length=args.w_length,
        k_bound=args.k_bound,
        shards=args.shards,
        budget=args.budget,
    )
    if args.which == "maxri":
        report = check_max_ri(cfg)
    elif args.which == "stability":
        if args.u is None:
            print("conjecture stability requires --u", file=sys.stderr)
            return 2
        report = check_stability(parse_word(args.u), cfg)
    elif args.which == "coeffs":
        report = check_coefficients(args.n_max, budget=args.budget)
    else:
        if args.u is not None:
            u = parse_word(args.u)
            m = args.m if args.m is not None else (max(u) if u else 1)
            report = check_rc(u, m, cfg)
        else:
            report = check_rc_sweep(cfg)
    _print_report(report, args.json)
    return _report_exit(report)


def cli_dispatch(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "ptab":
            t = p_tableau(parse_word(args.word))
            print(_dump({"rows": [list(r) for r in t.rows]}) if args.json else format_tableau(t))
            return 0
        if args.command == "commutes":
            ans = in_centralizer(parse_word(args.u), parse_word(args.w))
            print(_dump({"commutes": ans}) if args.json else ("true" if ans else "false"))
            return 0
        if args.command == "centralizer":
            found = centralizer_words(parse_word(args.u), args.len, args.max)
            if args.json:
                print(_dump({"words": [list(w) for w in found]}))
            else:
                for w in found:
                    print(format_word(w))
            return 0
        if args.command == "count":
            n = count_centralizer_words(parse_word(args.u), args.len, args.max)
            print(_dump({"count": n}) if args.json else n)
            return 0
        if args.command == "expand":
            poly = expand_binomial(parse_word(args.u), args.len)
            if args.json:
                print(_dump({"coefficients": list(poly.coefficients), "display": str(poly)}))
            else:
                print(poly)
            return 0
        return _run_conjecture(args)
    except (PlacticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
