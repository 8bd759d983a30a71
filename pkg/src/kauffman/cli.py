"""Command-line front end.

Exit codes: 0 success (and "equal" for eq), 1 not-equal or failed
selftest, 2 parse or domain errors, 3 internal cross-check failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import selftest
from .diagrams import from_json_dict, to_json_dict
from .draw import RenderOptions, render
from .enumeration import enumerate_normal_forms, enumerate_pairings, enumerate_terms
from .rewrite import ConsistencyError, format_step, normal_form, normalize
from .semantics import decide_equal, delta, diagram_to_nf, peel
from .syntax import ParseError, format_term, parse
from .terms import DomainError, nf_to_term


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kauffman",
        description="Kauffman monoids: Jones normal forms, diagrams, word problem.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, with_n: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        if with_n:
            p.add_argument("-n", type=int, required=True, metavar="N",
                           help="monoid size (number of strands)")
        return p

    p = add("nf", "reduce a term to Jones normal form")
    p.add_argument("term")
    p.add_argument("--trace", action="store_true", help="print one line per rewrite step")
    p.set_defaults(func=_cmd_nf)

    p = add("eq", "decide whether two terms are equal")
    p.add_argument("term_t")
    p.add_argument("term_u")
    p.add_argument("--cross-check", action="store_true",
                   help="also compare the interpreting diagrams")
    p.set_defaults(func=_cmd_eq)

    p = add("diagram", "print the diagram of a term as JSON")
    p.add_argument("term")
    p.set_defaults(func=_cmd_diagram)

    p = add("term-of", "read a diagram JSON from stdin, print its normal-form term",
            with_n=False)
    p.add_argument("--method", choices=("slope", "peel"), default="slope")
    p.set_defaults(func=_cmd_term_of)

    p = add("enum", "list terms, planar pairings, or normal forms")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--terms", type=int, metavar="L", help="all terms of length <= L")
    group.add_argument("--pairings", action="store_true",
                       help="all circle-free planar diagrams, one JSON per line")
    group.add_argument("--nf", type=int, metavar="C",
                       help="all normal forms with at most C circles")
    p.set_defaults(func=_cmd_enum)

    p = add("count", "count enumerated objects")
    p.add_argument("--pairings", action="store_true", required=True)
    p.set_defaults(func=_cmd_count)

    p = add("render", "draw the diagram of a term")
    p.add_argument("term")
    p.add_argument("--format", choices=("svg", "ascii"), default="svg")
    p.add_argument("--unit", type=float, default=None,
                   help="pixels per step (svg) or columns per step (ascii)")
    p.add_argument("--labels", action="store_true", help="label the boundary points")
    p.set_defaults(func=_cmd_render)

    p = add("selftest", "run the exhaustive small-size oracle suite", with_n=False)
    p.set_defaults(func=_cmd_selftest)

    return parser


def _cmd_nf(args) -> int:
    trace = normalize(parse(args.term, args.n))
    if args.trace:
        for step in trace.steps:
            print(format_step(step))
    print(format_term(nf_to_term(trace.output)))
    return 0


def _cmd_eq(args) -> int:
    verdict = decide_equal(parse(args.term_t, args.n), parse(args.term_u, args.n),
                           cross_check=args.cross_check)
    print("equal" if verdict.equal else "not-equal")
    return 0 if verdict.equal else 1


def _cmd_diagram(args) -> int:
    print(json.dumps(to_json_dict(delta(parse(args.term, args.n)))))
    return 0


def _cmd_term_of(args) -> int:
    try:
        data = json.load(sys.stdin)
    except json.JSONDecodeError as e:
        raise DomainError(f"invalid JSON on stdin: {e}") from None
    diagram = from_json_dict(data)
    if args.method == "slope":
        nf = diagram_to_nf(diagram)
    else:
        nf = normal_form(peel(diagram))
    print(format_term(nf_to_term(nf)))
    return 0


def _cmd_enum(args) -> int:
    if args.pairings:
        for d in enumerate_pairings(args.n):
            print(json.dumps(to_json_dict(d)))
    elif args.terms is not None:
        for t in enumerate_terms(args.n, args.terms):
            print(format_term(t))
    else:
        for f in enumerate_normal_forms(args.n, args.nf):
            print(format_term(nf_to_term(f)))
    return 0


def _cmd_count(args) -> int:
    print(len(enumerate_pairings(args.n)))
    return 0


def _cmd_render(args) -> int:
    unit = args.unit if args.unit is not None else (24.0 if args.format == "svg" else 4.0)
    opts = RenderOptions(format=args.format, unit=unit, show_labels=args.labels)
    print(render(delta(parse(args.term, args.n)), opts))
    return 0


def _cmd_selftest(args) -> int:
    return 0 if selftest.run() else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (ParseError, DomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ConsistencyError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
