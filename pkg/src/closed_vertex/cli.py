"""Command-line front end.

Subcommands: vertex, table, cremona, oracle, nef.  JSON goes to stdout,
diagnostics to stderr.  Exit codes: 0 success, 1 verification failure,
2 invalid input.  The default output format can be set with the
CLOSED_VERTEX_FORMAT environment variable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import nef
from .cremona import cremona_on_X, tau_star_Xhat
from .invariants import (
    InvalidDegrees,
    VertexDegrees,
    closed_vertex_invariant,
    invariant_table,
)
from .lattice import CurveClassX, CurveClassXhat
from .toric import invariant_curve_graph, verify_vertex_support

FORMAT_ENV = "CLOSED_VERTEX_FORMAT"
FORMATS = ("json", "csv", "plain")
NEF_TARGET_ALIASES = {"6.1": "anticanonical", "6.2": "djk", "anticanonical": "anticanonical", "djk": "djk"}


class UsageError(Exception):
    pass


def _format(args, tabular: bool = False) -> str:
    fmt = args.format or os.environ.get(FORMAT_ENV) or "json"
    if fmt not in FORMATS:
        raise UsageError(f"unknown output format {fmt!r}")
    if fmt == "csv" and not tabular:
        raise UsageError("csv output is only available for the table command")
    return fmt


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False)


def _fraction_str(x) -> str:
    return f"{x.numerator}/{x.denominator}"


def cmd_vertex(args) -> int:
    fmt = _format(args)
    try:
        v = VertexDegrees(args.g, args.d1, args.d2, args.d3)
    except InvalidDegrees as exc:
        raise UsageError(str(exc)) from exc
    result = closed_vertex_invariant(v)
    if fmt == "json":
        print(_dump(result.to_json(with_trace=args.trace)))
        return 0
    print(f"N^{v.g}_({v.d1},{v.d2},{v.d3}) = {_fraction_str(result.value)}")
    if args.trace:
        t = result.trace
        print(f"route: {t.route}")
        print(f"beta:  {_dump(t.initial.to_json())}")
        if t.transformed is not None:
            print(f"beta': {_dump(t.transformed.to_json())}")
        if t.witness is not None:
            print(f"vanishing witness: a_{t.witness}' < 0")
        if t.reduced_degree is not None:
            print(f"reduced degree: {t.reduced_degree}")
    return 0


def cmd_table(args) -> int:
    fmt = _format(args, tabular=True)
    if args.gmax < 0 or args.dmax < 0:
        raise UsageError("--gmax and --dmax must be non-negative")
    rows = invariant_table(args.gmax, args.dmax, workers=args.jobs)
    out = sys.stdout
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["g", "d1", "d2", "d3", "num", "den"])
        for r in rows:
            v = r.degrees
            writer.writerow([v.g, v.d1, v.d2, v.d3, r.value.numerator, r.value.denominator])
        out.write(buf.getvalue())
    elif fmt == "json":
        out.write(_dump([r.to_json(with_trace=True) for r in rows]) + "\n")
    else:
        for r in rows:
            v = r.degrees
            out.write(f"{v.g} {v.d1} {v.d2} {v.d3} {_fraction_str(r.value)}\n")
    return 0


def cmd_cremona(args) -> int:
    _format(args)
    try:
        obj = json.loads(args.class_json)
        if not isinstance(obj, dict):
            raise ValueError("class must be a JSON object")
        if args.space == "x":
            image = cremona_on_X(CurveClassX.from_json(obj))
        else:
            image = tau_star_Xhat(CurveClassXhat.from_json(obj))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot parse class: {exc}") from exc
    print(_dump(image.to_json()))
    return 0


def cmd_oracle(args) -> int:
    _format(args)
    if min(args.d1, args.d2, args.d3) < 1:
        raise UsageError("oracle degrees must all be positive")
    graph = invariant_curve_graph()
    verified, cert = verify_vertex_support(args.d1, args.d2, args.d3, graph)
    print(_dump(cert.to_json(graph, with_list=args.list)))
    if not verified:
        print("verification failed: unexpected connected decomposition", file=sys.stderr)
        return 1
    return 0


def cmd_nef(args) -> int:
    _format(args)
    if args.samples < 0:
        raise UsageError("--samples must be non-negative")
    target = NEF_TARGET_ALIASES[args.lemma]
    try:
        report = nef.certify(target, args.samples, args.seed, args.max_coefficient)
    except nef.PreconditionViolation as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return 1
    print(_dump(report.to_json()))
    if not report.nef_certified:
        print("certification failed: a check is negative or inconsistent", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="closed-vertex",
        description="Exact local Gromov-Witten invariants of the closed topological vertex.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p):
        p.add_argument("--format", choices=FORMATS, default=None,
                       help=f"output format (default: ${FORMAT_ENV} or json)")
        return p

    p = with_format(sub.add_parser("vertex", help="compute N^g_{d1,d2,d3}"))
    p.add_argument("g", type=int)
    p.add_argument("d1", type=int)
    p.add_argument("d2", type=int)
    p.add_argument("d3", type=int)
    p.add_argument("--trace", action="store_true", help="include the reduction trace")
    p.set_defaults(func=cmd_vertex)

    p = with_format(sub.add_parser("table", help="tabulate invariants"))
    p.add_argument("--gmax", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1, help="worker threads (output is identical)")
    p.set_defaults(func=cmd_table)

    p = with_format(sub.add_parser("cremona", help="apply the Cremona involution to a class"))
    p.add_argument("class_json", metavar="CLASS_JSON")
    p.add_argument("--space", choices=("x", "xhat"), default="x")
    p.set_defaults(func=cmd_cremona)

    p = with_format(sub.add_parser("oracle", help="exhaustive support check for the vertex class"))
    p.add_argument("d1", type=int)
    p.add_argument("d2", type=int)
    p.add_argument("d3", type=int)
    p.add_argument("--list", action="store_true", help="list the connected decompositions")
    p.set_defaults(func=cmd_oracle)

    p = with_format(sub.add_parser("nef", help="randomized nef certification"))
    p.add_argument("--lemma", choices=sorted(NEF_TARGET_ALIASES), required=True,
                   help="6.1/anticanonical: -K_X on X; 6.2/djk: D_jk on X-hat")
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-coefficient", type=int, default=20)
    p.set_defaults(func=cmd_nef)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
