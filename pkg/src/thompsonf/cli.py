"""Command line front end.

Subcommands: canon, act, eval, value, graph, path, gens, verify, selftest.
Points are written as v(w), e.g. 10(0100) or (01), or as exact fractions
p/q; words use the letters a = x0, A = x0^-1, b = x1, B = x1^-1 and "1" for
the identity.  All output is exact; fractions are printed in lowest terms.

Exit status: 0 when everything passed, 1 on a verification failure or a
failed search, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys

from .cantor import PointSyntaxError, act_word, parse_point
from .plmap import check_relators, word_to_plmap
from .report import Report
from .schreier import (
    BallCapacityError,
    PathNotFoundError,
    ball,
    check_addresses,
    export_dot,
    export_json,
    find_path,
)
from .stabgen import (
    check_reduction,
    check_stabilizer_relators,
    check_twin_points,
    format_generators,
    generators_to_json,
    stabilizer_generators,
    verify_generators,
)
from .words import WordSyntaxError, format_word, parse_word

SELFTEST_PERIODS = ("0", "1", "01", "10", "0100", "011")
TWIN_PREFIXES = ("", "1", "01")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thompsonf", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", help="print the canonical form and exact value of a point")
    p.add_argument("point")

    p = sub.add_parser("act", help="apply a word to a point")
    p.add_argument("point")
    p.add_argument("word")

    p = sub.add_parser("eval", help="print the breakpoints of the map of a word")
    p.add_argument("word")

    p = sub.add_parser("value", help="print the exact rational value of a point")
    p.add_argument("point")

    p = sub.add_parser("graph", help="emit a Schreier-graph ball around a point")
    p.add_argument("point")
    p.add_argument("--radius", type=int, default=3)
    p.add_argument("--cap", type=int, default=100_000)
    p.add_argument("--format", choices=("dot", "json"), default="dot")

    p = sub.add_parser("path", help="shortest word moving one point to another")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--radius", type=int, default=32)

    p = sub.add_parser("gens", help="stabilizer generating set for a point")
    p.add_argument("point")
    p.add_argument("--radius", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="verify the stabilizer generating set for a point")
    p.add_argument("point")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--radius", type=int, default=None)

    p = sub.add_parser("selftest", help="run the full identity and uniqueness suites")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--label-len", type=int, default=5)
    return parser


def _print_report(report: Report) -> int:
    print(report)
    return 0 if report.passed else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (PointSyntaxError, WordSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PathNotFoundError, BallCapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "canon":
        point = parse_point(args.point)
        print(f"{point} = {point.value()}")
        return 0
    if args.command == "act":
        point = parse_point(args.point)
        print(act_word(point, parse_word(args.word)))
        return 0
    if args.command == "eval":
        plmap = word_to_plmap(parse_word(args.word))
        for t, y in plmap.breakpoints:
            print(f"{t} -> {y}")
        return 0
    if args.command == "value":
        print(parse_point(args.point).value())
        return 0
    if args.command == "graph":
        b = ball(parse_point(args.point), args.radius, args.cap)
        text = export_dot(b) if args.format == "dot" else export_json(b) + "\n"
        sys.stdout.write(text)
        return 0
    if args.command == "path":
        word = find_path(parse_point(args.source), parse_point(args.target), args.radius)
        print(format_word(word))
        return 0
    if args.command == "gens":
        gens = stabilizer_generators(parse_point(args.point), args.radius)
        if args.format == "json":
            print(generators_to_json(gens))
        else:
            sys.stdout.write(format_generators(gens))
        return 0
    if args.command == "verify":
        gens = stabilizer_generators(parse_point(args.point), args.radius)
        report = verify_generators(gens, samples=args.samples, seed=args.seed)
        report.merge(check_stabilizer_relators())
        report.title = f"verification of {gens.point}"
        return _print_report(report)
    if args.command == "selftest":
        report = check_relators(args.depth)
        report.merge(check_reduction(args.label_len, 4))
        for period in SELFTEST_PERIODS:
            report.merge(check_addresses(period, args.label_len))
        for prefix in TWIN_PREFIXES:
            report.merge(check_twin_points(prefix))
        report.title = "selftest"
        return _print_report(report)
    raise AssertionError(f"unhandled command {args.command}")


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
