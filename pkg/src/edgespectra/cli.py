"""Command-line interface.

Exit codes: 0 all checks passed, 1 a theorem check failed, 2 usage or
input error.  ``EDGESPECTRA_FORMAT`` sets the default output format.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .enumerate import MAX_N, iter_source
from .families import FamilyError, parse_family
from .graph import Graph, GraphError, is_bipartite_bfs, parse_edge_list
from .graph6 import parse_graph6, to_graph6
from .matrices import assemble, blocks, format_matrix
from .orientation import OrientationError, orient, parse_orientation
from .poly import format_poly, integer_spectrum
from .report import RunReport, run_checkers, sweep
from .theorems import CHECKERS, charpoly, resolve_checkers

FAMILY_HELP = (
    "family descriptor name[:a,b,...]: path:N cycle:N complete:N kpq:P,Q star:K "
    "petersen hypercube:D pruefer:a,b,..."
)


class UsageError(Exception):
    pass


def _default_format() -> str:
    fmt = os.environ.get("EDGESPECTRA_FORMAT", "text").lower()
    return fmt if fmt in ("text", "json") else "text"


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--edges", metavar="FILE", help="edge-list file ('-' for stdin)")
    src.add_argument("--graph6", metavar="STR", help="graph6 string")
    src.add_argument("--family", metavar="SPEC", help=FAMILY_HELP)


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default=None, help="output format (default: $EDGESPECTRA_FORMAT or text)")


def _load_graph(args: argparse.Namespace) -> tuple[Graph, str]:
    try:
        if args.edges is not None:
            text = sys.stdin.read() if args.edges == "-" else Path(args.edges).read_text()
            return parse_edge_list(text), f"edges:{args.edges}"
        if args.graph6 is not None:
            return parse_graph6(args.graph6), f"graph6:{args.graph6}"
        return parse_family(args.family), f"family:{args.family}"
    except (GraphError, OSError, UnicodeError) as exc:
        raise UsageError(str(exc)) from exc


def _oriented(g: Graph, text: str):
    try:
        kw = parse_orientation(text)
        if kw["strategy"] == "bipartite":
            bip = is_bipartite_bfs(g)
            if bip is None:
                raise UsageError("bipartite orientation requested but the graph has an odd cycle")
            kw["bipartition"] = bip
        return orient(g, **kw)
    except OrientationError as exc:
        raise UsageError(str(exc)) from exc


def cmd_matrix(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args)
    oe = _oriented(g, args.orient)
    em = assemble(oe)
    named = {"M": em.M, "D": em.D, "N": em.N}
    block_mats = {}
    if args.blocks:
        bd = blocks(em)
        block_mats = {k: getattr(bd, k) for k in ("P", "Q", "R", "S", "M11", "M12", "M21", "M22", "D1", "D2")}
    if args.format == "json":
        out = {
            "schema": 1,
            "graph6": to_graph6(g),
            "arcs": [list(a) for a in oe.arcs],
            "labels": [oe.label(i) for i in range(2 * oe.m)],
            "matrices": {k: v.to_json() for k, v in {**named, **block_mats}.items()},
        }
        print(json.dumps(out, indent=2))
        return 0
    print("arcs: " + ", ".join(f"{oe.label(i)}=({s},{t})" for i, (s, t) in enumerate(oe.arcs)))
    for k, v in named.items():
        print(f"\n{k}(X):")
        print(format_matrix(v, oe))
    for k, v in block_mats.items():
        print(f"\n{k}:")
        print(format_matrix(v))
    return 0


def _which_matrix(g: Graph, which: str):
    if which == "vertex-adjacency":
        return g.adjacency_matrix()
    em = assemble(orient(g))
    return {"n": em.N, "d": em.D, "signless": em.signless, "adjacency": em.M}[which]


def cmd_charpoly(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args)
    p = charpoly(_which_matrix(g, args.which))
    spec = integer_spectrum(p)
    if args.format == "json":
        out = {"schema": 1, "graph6": to_graph6(g), "which": args.which, "charpoly": p.to_json()}
        if spec is not None:
            out["integer_spectrum"] = {str(r): k for r, k in spec.items()}
        print(json.dumps(out, indent=2))
        return 0
    print(format_poly(p))
    if spec is not None:
        print("root  multiplicity")
        for r, k in spec.items():
            print(f"{r:>4}  {k}")
    return 0


def _emit_report(report: RunReport, fmt: str) -> int:
    if fmt == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.to_text())
    return 0 if report.ok else 1


def cmd_check(args: argparse.Namespace) -> int:
    g, desc = _load_graph(args)
    try:
        names = resolve_checkers(args.checker)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    report = RunReport(input=desc, checkers=names, verdicts=run_checkers(g, names))
    return _emit_report(report, args.format)


def cmd_sweep(args: argparse.Namespace) -> int:
    try:
        names = resolve_checkers(args.checkers)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    if args.graph6_file:
        try:
            lines = Path(args.graph6_file).read_text().split()
            graphs = [parse_graph6(s) for s in lines]
        except (GraphError, OSError, UnicodeError) as exc:
            raise UsageError(str(exc)) from exc
        desc = f"graph6-file:{args.graph6_file}"
    else:
        if not 0 <= args.min_n <= args.max_n <= MAX_N:
            raise UsageError(f"need 0 <= --min-n <= --max-n <= {MAX_N}")
        graphs = list(iter_source(args.source, args.min_n, args.max_n))
        desc = f"enumerate:{args.source}:{args.min_n}..{args.max_n}"
    report = sweep(graphs, names, jobs=args.jobs, input_descriptor=desc, collisions=args.report_collisions)
    if args.output:
        Path(args.output).write_text(json.dumps(report.to_json(), indent=2) + "\n")
    return _emit_report(report, args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgespectra",
        description="Exact spectra of the edge adjacency matrix M and edge Laplacian N = D - M.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", help="print M, D and N")
    _add_input(p)
    p.add_argument("--orient", default="canonical", help="canonical | bipartite | random:SEED | arcs:0>1,1>2,...")
    p.add_argument("--blocks", action="store_true", help="also print the m x m blocks")
    _add_format(p)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("charpoly", help="characteristic polynomial")
    _add_input(p)
    p.add_argument("--which", choices=("n", "d", "signless", "adjacency", "vertex-adjacency"), default="n",
                   help="N, D, D + M, the edge adjacency M, or the vertex adjacency A(X)")
    _add_format(p)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("check", help="run theorem checkers on one graph")
    _add_input(p)
    p.add_argument("checker", help=f"one of {', '.join(CHECKERS)}, all (comma-separated list allowed)")
    _add_format(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="run checkers over enumerated graphs or a graph6 file")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--source", choices=("connected", "all", "trees"), default="connected")
    p.add_argument("--graph6-file", metavar="FILE", help="one graph6 string per line; bypasses the enumerator")
    p.add_argument("--checkers", default="all", help="comma-separated checker names or 'all'")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report-collisions", action="store_true", help="list graphs sharing charpoly(N)")
    p.add_argument("--output", metavar="FILE", help="also write the JSON report here")
    _add_format(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "format", None) is None:
        args.format = _default_format()
    try:
        return args.func(args)
    except (UsageError, FamilyError) as exc:
        print(f"edgespectra: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
