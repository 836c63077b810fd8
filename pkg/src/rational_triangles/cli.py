"""Command-line front end.

Exit codes: 0 on success (a "not rational" verdict is a success), 1 on a
domain or validation failure, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import render
from .exact import parse_rational
from .family import eight_triangles, enumerate_catalog
from .pythagorean import ValidationError, enumerate_primitive, pyth_rational, triple_from_params
from .triangle import construct, cos_from_sides, is_rational_triangle

FORMATS = ("text", "json", "csv")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {text!r}")
    return value


def _slope(text: str):
    """Strict p/q with positive p and q, as (p, q) before reduction."""
    try:
        value = parse_rational(text, allow_integer=False)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _side(text: str):
    try:
        value = parse_rational(text, allow_integer=True)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"side lengths must be positive: {text!r}")
    return value


def _common_options(suppress: bool) -> argparse.ArgumentParser:
    # subcommand copies use SUPPRESS so they never clobber a value given before the subcommand
    default = argparse.SUPPRESS if suppress else None
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=FORMATS, default=default, help="output format (default: text)")
    parent.add_argument("--out", metavar="PATH", default=default, help="write output to PATH instead of stdout")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rational-triangles",
        description="Generate and verify rational triangles built from Pythagorean rationals.",
        parents=[_common_options(suppress=False)],
    )
    common = _common_options(suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triples", parents=[common], help="list primitive Pythagorean triples")
    p.add_argument("--max-m", type=_positive_int, required=True)
    p.add_argument("--d", type=_positive_int, default=1, help="scale every triple by d")

    p = sub.add_parser("triangle", parents=[common], help="full report for one triangle")
    p.add_argument("--r1", type=_slope, required=True, help="first slope, p/q")
    p.add_argument("--r2", type=_slope, required=True, help="magnitude of the second slope, p/q")
    p.add_argument("--degrees", action="store_true", help="append approximate degree measures")

    p = sub.add_parser("family", parents=[common], help="the eight triangles of two Pythagorean rationals")
    p.add_argument("--r", type=_slope, required=True)
    p.add_argument("--s", type=_slope, required=True)

    p = sub.add_parser("catalog", parents=[common], help="count families over all primitive triples")
    p.add_argument("--max-m", type=_positive_int, required=True)
    p.add_argument("--full", action="store_true", help="include every family in the output")
    p.add_argument("--workers", type=_positive_int, default=1, help="worker processes for enumeration")

    p = sub.add_parser("check", parents=[common], help="decide whether three sides form a rational triangle")
    p.add_argument("sides", nargs=3, type=_side, metavar="SIDE", help="p/q or whole number")
    return parser


def _to_pyth(value):
    return pyth_rational(value.numerator, value.denominator)


def _cmd_triples(args, fmt: str) -> str:
    triples = [triple_from_params(args.d, t.m, t.n) for t in enumerate_primitive(args.max_m)]
    if fmt == "json":
        return render.dumps_json([render.triple_json(t) for t in triples])
    if fmt == "csv":
        return render.dumps_csv(render.TRIPLE_COLUMNS, (t.as_row() for t in triples))
    return render.triples_text(triples)


def _cmd_triangle(args, fmt: str) -> str:
    t = construct(_to_pyth(args.r1), _to_pyth(args.r2))
    if fmt == "json":
        obj = render.triangle_json(t)
        if args.degrees:
            obj["degrees_approx"] = render.degree_approximations(t)
        return render.dumps_json(obj)
    if fmt == "csv":
        return render.dumps_csv(render.TRIANGLE_COLUMNS, [render.triangle_row(t)])
    return render.triangle_text(t, degrees=args.degrees)


def _cmd_family(args, fmt: str) -> str:
    r, s = _to_pyth(args.r), _to_pyth(args.s)
    f = eight_triangles(r, s)
    if fmt == "json":
        return render.dumps_json(render.family_json(f))
    if fmt == "csv":
        return render.dumps_csv(render.MEMBER_COLUMNS, render.family_rows(f))
    return render.family_text(f)


def _cmd_catalog(args, fmt: str) -> str:
    catalog = enumerate_catalog(args.max_m, full=args.full, workers=args.workers)
    if fmt == "json":
        return render.dumps_json(render.catalog_json(catalog))
    if fmt == "csv":
        return render.catalog_csv(catalog)
    return render.catalog_text(catalog)


def _cmd_check(args, fmt: str) -> str:
    sides = args.sides
    verdict = is_rational_triangle(*sides)
    cosines = cos_from_sides(*sides)
    if fmt == "json":
        return render.dumps_json(render.check_fields(sides, verdict, cosines))
    if fmt == "csv":
        return render.dumps_csv(render.CHECK_COLUMNS, [render.check_row(sides, verdict, cosines)])
    return render.check_text(sides, verdict, cosines)


COMMANDS = {
    "triples": _cmd_triples,
    "triangle": _cmd_triangle,
    "family": _cmd_family,
    "catalog": _cmd_catalog,
    "check": _cmd_check,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    fmt = args.format or "text"
    try:
        output = COMMANDS[args.command](args, fmt)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out is None:
        sys.stdout.write(output)
        return 0
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(output)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
