"""Command line front end.

Subcommands:

* compute: connected edge cover polynomial of graphs
* verify: run claim suites and report AGREE/DISAGREE per claim
* enumerate: catalog of connected k-regular graphs on n vertices
* equiv: group graphs by exact polynomial equality
* spanning-trees: matrix-tree counts
* recurrence-scan: per-edge deletion recurrence against the oracle

Graph inputs are auto-detected: a token matching the family grammar
(P7, C4, K5, Kb3,3, F2,3, prism3, petersen, corona(K4)) is a family,
an existing file is read as graph6 lines, anything else is parsed as a
graph6 string. Exit codes: 0 success, 1 usage or input error, 2 verify
found at least one disagreement, 3 a size cap stopped the computation.
Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import NoReturn, Sequence

from .claims import SUITES, VerificationReport, suite_claims, verify_claims
from .equivalence import equivalence_classes
from .errors import EcpolyError, SizeCapExceeded
from .families import enumerate_connected_regular, make_family, parse_family_text
from .graphs import Graph, parse_graph6, write_graph6
from .oracle import (
    DEFAULT_MAX_EDGES,
    OracleConfig,
    connected_edge_cover_polynomial,
    spanning_tree_count,
)
from .recurrence import recurrence_scan

_FORMATS = ("text", "json", "csv")


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit 1; code 2 is reserved for verified disagreements."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=_FORMATS, default="text", help="output format")
    sub.add_argument(
        "--max-edges",
        type=int,
        default=DEFAULT_MAX_EDGES,
        help="enumeration oracle edge cap",
    )
    sub.add_argument("--workers", type=int, default=1, help="oracle worker processes")
    sub.add_argument("--output", metavar="PATH", help="write the report to a file instead of stdout")


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(prog="ecpoly", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="subcommand", required=True)

    sub = subs.add_parser("compute", help="connected edge cover polynomial")
    sub.add_argument("input", help="family spec, graph6 string, or graph6 file")
    _add_common(sub)

    sub = subs.add_parser("verify", help="check recorded claims against the oracle")
    sub.add_argument("claims", nargs="*", help="explicit claim ids (default: a suite)")
    sub.add_argument(
        "--suite",
        default=None,
        help="claim suite name (default paper-all); one of: " + ", ".join(sorted(SUITES)),
    )
    _add_common(sub)

    sub = subs.add_parser("enumerate", help="connected k-regular graphs as graph6")
    sub.add_argument("n", type=int, help="vertex count")
    sub.add_argument("k", type=int, help="degree")
    _add_common(sub)

    sub = subs.add_parser("equiv", help="group graphs by polynomial equality")
    sub.add_argument("inputs", nargs="+", help="family specs, graph6 strings, or graph6 files")
    _add_common(sub)

    sub = subs.add_parser("spanning-trees", help="spanning tree counts via matrix-tree")
    sub.add_argument("input", help="family spec, graph6 string, or graph6 file")
    _add_common(sub)

    sub = subs.add_parser("recurrence-scan", help="deletion recurrence vs oracle, per edge")
    sub.add_argument("input", help="family spec or graph6 string for a single graph")
    _add_common(sub)

    return parser


def _resolve_graphs(token: str) -> "list[tuple[str, Graph]]":
    """Resolve one input token to labeled graphs, in input order."""
    spec = parse_family_text(token)
    if spec is not None:
        return [(token, make_family(spec))]
    if os.path.isfile(token):
        out = []
        with open(token, "r", encoding="ascii") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    out.append((line, parse_graph6(line)))
        return out
    return [(token, parse_graph6(token))]


def _emit(text: str, output: "str | None") -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _poly_json(poly) -> str:
    return json.dumps(poly.to_json(), separators=(",", ":"))


def _csv_text(header: "list[str]", rows: "list[list[str]]") -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def render_report(report: VerificationReport, fmt: str = "text") -> str:
    """Serialize a verification report; orderings are already fixed by
    the report itself, so equal reports render to equal bytes."""
    if fmt == "json":
        payload = {
            "entries": [
                {
                    "claim_id": e.claim_id,
                    "source": e.source,
                    "claimed": e.claimed,
                    "computed": e.computed,
                    "status": e.status,
                }
                for e in report.entries
            ]
        }
        return json.dumps(payload, separators=(",", ":")) + "\n"
    if fmt == "csv":
        return _csv_text(
            ["claim_id", "source", "claimed", "computed", "status"],
            [[e.claim_id, e.source, e.claimed, e.computed, e.status] for e in report.entries],
        )
    wid = max((len(e.claim_id) for e in report.entries), default=8)
    lines = []
    for e in report.entries:
        lines.append(f"{e.claim_id:<{wid}}  {e.status:<14}  {e.claimed}  vs  {e.computed}")
    tally = {"AGREE": 0, "DISAGREE": 0, "NOT_APPLICABLE": 0}
    for e in report.entries:
        tally[e.status] += 1
    lines.append(
        f"{len(report.entries)} claims: {tally['AGREE']} agree, "
        f"{tally['DISAGREE']} disagree, {tally['NOT_APPLICABLE']} not applicable"
    )
    return "\n".join(lines) + "\n"


def _cmd_compute(args: argparse.Namespace, cfg: OracleConfig) -> int:
    labeled = _resolve_graphs(args.input)
    polys = [(label, connected_edge_cover_polynomial(g, cfg)) for label, g in labeled]
    if args.format == "json":
        text = "".join(_poly_json(p) + "\n" for _, p in polys)
    elif args.format == "csv":
        text = _csv_text(["input", "polynomial"], [[label, p.to_text()] for label, p in polys])
    else:
        text = "".join(p.to_text() + "\n" for _, p in polys)
    _emit(text, args.output)
    return 0


def _cmd_verify(args: argparse.Namespace, cfg: OracleConfig) -> int:
    if args.claims and args.suite is not None:
        raise EcpolyError("give explicit claim ids or --suite, not both")
    ids = tuple(args.claims) if args.claims else suite_claims(args.suite or "paper-all")
    report = verify_claims(ids, cfg)
    _emit(render_report(report, args.format), args.output)
    return 2 if report.has_disagreement() else 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    graphs = enumerate_connected_regular(args.n, args.k)
    lines = [write_graph6(g) for g in graphs]
    if args.format == "json":
        text = json.dumps({"count": len(lines), "graphs": lines}, separators=(",", ":")) + "\n"
    elif args.format == "csv":
        text = _csv_text(["graph6"], [[line] for line in lines])
    else:
        text = "".join(line + "\n" for line in lines)
    _emit(text, args.output)
    return 0


def _cmd_equiv(args: argparse.Namespace, cfg: OracleConfig) -> int:
    graphs: "list[Graph]" = []
    for token in args.inputs:
        graphs.extend(g for _, g in _resolve_graphs(token))
    scan = equivalence_classes(graphs, cfg)
    if args.format == "json":
        payload = {
            "classes": [
                {
                    "polynomial": poly.to_json(),
                    "members": [write_graph6(g) for g in members],
                }
                for members, poly in zip(scan.classes, scan.polynomials)
            ],
            "pairs": [[write_graph6(a), write_graph6(b)] for a, b in scan.equivalent_pairs],
            "skipped": [write_graph6(g) for g in scan.skipped],
        }
        text = json.dumps(payload, separators=(",", ":")) + "\n"
    elif args.format == "csv":
        rows = []
        for index, (members, poly) in enumerate(zip(scan.classes, scan.polynomials)):
            for g in members:
                rows.append(["member", str(index), write_graph6(g), poly.to_text()])
        for g in scan.skipped:
            rows.append(["skipped", "", write_graph6(g), ""])
        text = _csv_text(["kind", "class_index", "graph6", "polynomial"], rows)
    else:
        lines = []
        for members, poly in zip(scan.classes, scan.polynomials):
            lines.append("class " + " ".join(write_graph6(g) for g in members) + " :: " + poly.to_text())
        for a, b in scan.equivalent_pairs:
            lines.append(f"pair {write_graph6(a)} {write_graph6(b)}")
        for g in scan.skipped:
            lines.append(f"skipped {write_graph6(g)}")
        text = "".join(line + "\n" for line in lines)
    _emit(text, args.output)
    return 0


def _cmd_spanning_trees(args: argparse.Namespace) -> int:
    labeled = _resolve_graphs(args.input)
    counts = [(label, spanning_tree_count(g)) for label, g in labeled]
    if args.format == "json":
        text = "".join(
            json.dumps({"spanning_trees": c}, separators=(",", ":")) + "\n" for _, c in counts
        )
    elif args.format == "csv":
        text = _csv_text(["input", "spanning_trees"], [[label, str(c)] for label, c in counts])
    else:
        text = "".join(f"{c}\n" for _, c in counts)
    _emit(text, args.output)
    return 0


def _cmd_recurrence_scan(args: argparse.Namespace, cfg: OracleConfig) -> int:
    labeled = _resolve_graphs(args.input)
    if len(labeled) != 1:
        raise EcpolyError("recurrence-scan takes exactly one graph")
    entries = recurrence_scan(labeled[0][1], cfg)
    if args.format == "json":
        payload = {
            "edges": [
                {
                    "edge_index": e.edge_index,
                    "edge": list(e.edge),
                    "recurrence": e.recurrence.to_json(),
                    "oracle": e.oracle.to_json(),
                    "equal": e.equal,
                }
                for e in entries
            ]
        }
        text = json.dumps(payload, separators=(",", ":")) + "\n"
    elif args.format == "csv":
        rows = [
            [
                str(e.edge_index),
                str(e.edge[0]),
                str(e.edge[1]),
                e.recurrence.to_text(),
                e.oracle.to_text(),
                "true" if e.equal else "false",
            ]
            for e in entries
        ]
        text = _csv_text(["edge_index", "u", "v", "recurrence", "oracle", "equal"], rows)
    else:
        lines = [
            f"edge {e.edge_index} ({e.edge[0]},{e.edge[1]}): "
            f"recurrence {e.recurrence.to_text()} | oracle {e.oracle.to_text()} | "
            + ("EQUAL" if e.equal else "DIFFER")
            for e in entries
        ]
        text = "".join(line + "\n" for line in lines)
    _emit(text, args.output)
    return 0


def main(argv: "Sequence[str] | None" = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = OracleConfig(max_edges=args.max_edges, workers=args.workers)
        if args.subcommand == "compute":
            return _cmd_compute(args, cfg)
        if args.subcommand == "verify":
            return _cmd_verify(args, cfg)
        if args.subcommand == "enumerate":
            return _cmd_enumerate(args)
        if args.subcommand == "equiv":
            return _cmd_equiv(args, cfg)
        if args.subcommand == "spanning-trees":
            return _cmd_spanning_trees(args)
        return _cmd_recurrence_scan(args, cfg)
    except SizeCapExceeded as exc:
        print(f"ecpoly: size cap: {exc}", file=sys.stderr)
        return 3
    except (EcpolyError, OSError) as exc:
        print(f"ecpoly: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
