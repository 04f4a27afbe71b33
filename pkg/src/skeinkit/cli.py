"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 fractional exponent,
4 coprimality, 5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cabling import CableSpec, CoprimalityError, cable_decorate
from .expr import ExprParseError, parse_element
from .ring import SpecializationError, specialize_slN
from .skein import FractionalExponentError, delta_PN
from .symfunc import BASES, BasisExpansion, from_basis, render_terms, to_basis
from .partitions import partitions_of
from .verify import DEFAULT_MAX, SUITES, run_suite

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FRACTIONAL = 3
EXIT_COPRIME = 4
EXIT_VERIFY = 5

DEFAULT_TABLE_CAP = 10


def _read_expr(raw: str) -> str:
    if raw == "-":
        return sys.stdin.read()
    return raw


def _emit_expansion(exp: BasisExpansion, fmt: str):
    if fmt == "json":
        print(json.dumps(exp.to_json()))
    else:
        print(exp)


def _cmd_expand(args) -> int:
    element = parse_element(_read_expr(args.expr))
    _emit_expansion(to_basis(element, args.to), args.format)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.suite not in SUITES:
        print(f"unknown suite {args.suite!r}; choices: {', '.join(sorted(SUITES))}",
              file=sys.stderr)
        return EXIT_USAGE
    results = run_suite(args.suite, args.max)
    failed = sum(1 for _, ok in results if not ok)
    if args.format == "json":
        print(json.dumps({
            "suite": args.suite,
            "results": [{"identity": label, "pass": ok} for label, ok in results],
            "passed": len(results) - failed,
            "failed": failed,
        }))
    else:
        for label, ok in results:
            print(f"{'PASS' if ok else 'FAIL'}  {label}")
        print(f"{args.suite}: {len(results) - failed} passed, {failed} failed")
    return EXIT_VERIFY if failed else EXIT_OK


def _cmd_cable(args) -> int:
    element = parse_element(_read_expr(args.expr))
    result = cable_decorate(CableSpec(args.m, args.n), element)
    _emit_expansion(to_basis(result, "schur"), args.format)
    return EXIT_OK


def _cmd_delta(args) -> int:
    element = parse_element(_read_expr(args.expr))
    result = delta_PN(element, args.N)
    _emit_expansion(to_basis(result, "schur"), args.format)
    return EXIT_OK


def _cmd_table(args) -> int:
    cap = int(os.environ.get("SKEINKIT_MAX_DEGREE", DEFAULT_TABLE_CAP))
    if not 1 <= args.degree <= cap:
        print(f"degree must be between 1 and {cap}", file=sys.stderr)
        return EXIT_USAGE
    lams = sorted(partitions_of(args.degree), reverse=True)
    rows = []
    for lam in lams:
        element = from_basis(BasisExpansion(args.src, {lam: 1}))
        expansion = to_basis(element, args.to)
        rows.append([expansion.coeff(mu) for mu in lams])
    if args.format == "json":
        print(json.dumps({
            "degree": args.degree,
            "from": args.src,
            "to": args.to,
            "partitions": [list(lam.parts) for lam in lams],
            "matrix": [[c.to_json() for c in row] for row in rows],
        }))
    else:
        for row in rows:
            print("\t".join(str(c) for c in row))
    return EXIT_OK


def _cmd_eval(args) -> int:
    element = parse_element(_read_expr(args.expr))
    expansion = to_basis(element, "schur")
    specialized = BasisExpansion(
        "schur",
        {lam: specialize_slN(c, args.N) for lam, c in expansion.terms.items()},
    )
    _emit_expansion(specialized, args.format)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skeinkit",
        description="Exact computer algebra for the positive Homfly skein of the annulus",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("expand", help="expand an element expression in a basis")
    p.add_argument("--expr", required=True, help="element expression, or - for stdin")
    p.add_argument("--to", required=True, choices=BASES)
    add_format(p)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("verify", help="run a named identity suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--max", type=int, default=None,
                   help=f"max degree (defaults: {DEFAULT_MAX})")
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("cable", help="decorate an (m, n) torus pattern")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--expr", required=True)
    add_format(p)
    p.set_defaults(func=_cmd_cable)

    p = sub.add_parser("delta", help="apply the power-sum meridian operator")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--expr", required=True)
    add_format(p)
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("table", help="print a basis transition matrix")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--from", dest="src", required=True, choices=BASES)
    p.add_argument("--to", required=True, choices=BASES)
    add_format(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("eval", help="specialize coefficients at v = s^-N")
    p.add_argument("--expr", required=True)
    p.add_argument("--N", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_eval)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ExprParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FractionalExponentError as exc:
        print(f"fractional exponent: {exc}", file=sys.stderr)
        return EXIT_FRACTIONAL
    except CoprimalityError as exc:
        print(f"coprimality: {exc}", file=sys.stderr)
        return EXIT_COPRIME
    except (SpecializationError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
