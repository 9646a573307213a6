"""Command-line interface.

Commands compose under shells: graphs travel as one graph6 line each on
stdin/stdout, while summaries, warnings and progress go to stderr.  Exit
codes separate mathematical verdicts from failures: 0 squco, 10 valid but
not squco, 2 input/configuration error, 3 checkpoint error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass

from ._version import __version__
from .checks import FILTER_ORDER, FILTERS, QUICK_FILTERS, report
from .generate import Graph6Error, circulant, g6_decode, g6_encode, lcf, named
from .graph import Graph, GraphError
from .search import (CheckpointError, SearchConfig, SearchError, enumerate_graphs)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CHECKPOINT = 3
EXIT_NOT_SQUCO = 10

_JOBS_ENV = "SQUCO_JOBS"

_DOCUMENT_KEYS = (
    "graph6", "order", "size", "degree_sequence", "max_degree", "girth",
    "radius", "diameter", "connected", "cut_vertices", "regular", "bipartite",
    "vertex_transitive", "squco",
)


@dataclass
class ReportDocument:
    """Serializable property report plus provenance fields."""

    graph6: str
    report: dict
    tool_version: str
    input_digest: str
    duration_seconds: float

    def to_json_obj(self) -> dict:
        obj = {"graph6": self.graph6}
        obj.update({k: self.report[k] for k in _DOCUMENT_KEYS if k != "graph6"})
        obj["filters"] = self.report["filters"]
        obj["tool_version"] = self.tool_version
        obj["input_digest"] = self.input_digest
        obj["duration_seconds"] = self.duration_seconds
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict) -> "ReportDocument":
        rep = {k: obj[k] for k in _DOCUMENT_KEYS if k != "graph6"}
        rep["filters"] = obj["filters"]
        return cls(
            graph6=obj["graph6"],
            report=rep,
            tool_version=obj["tool_version"],
            input_digest=obj["input_digest"],
            duration_seconds=obj["duration_seconds"],
        )

    def to_text(self) -> str:
        rep = self.report
        lines = [f"graph6: {self.graph6}"]
        for key in _DOCUMENT_KEYS[1:]:
            value = rep[key]
            if key == "degree_sequence":
                value = " ".join(map(str, value)) if value else "-"
            elif key == "cut_vertices":
                value = " ".join(map(str, value)) if value else "-"
            elif isinstance(value, bool):
                value = "true" if value else "false"
            lines.append(f"{key}: {value}")
        for name, fr in rep["filters"].items():
            verdict = "pass" if fr["passed"] else "fail"
            lines.append(f"filter.{name}: {verdict} -- {fr['detail']}")
        lines.append(f"tool_version: {self.tool_version}")
        lines.append(f"input_digest: {self.input_digest}")
        lines.append(f"duration_seconds: {self.duration_seconds:.6f}")
        return "\n".join(lines)


def build_document(g: Graph, duration: float) -> ReportDocument:
    g6 = g6_encode(g)
    digest = "sha256:" + hashlib.sha256(g6.encode()).hexdigest()
    return ReportDocument(
        graph6=g6,
        report=report(g).to_dict(),
        tool_version=__version__,
        input_digest=digest,
        duration_seconds=duration,
    )


def _read_graph_arg(args) -> Graph:
    if args.name:
        return named(args.name)
    if args.g6:
        return g6_decode(args.g6)
    for line in sys.stdin:
        if line.strip():
            return g6_decode(line)
    raise Graph6Error("no graph on stdin", 0)


def _parse_filter_names(spec: str) -> tuple[str, ...]:
    if spec == "leaf":
        return FILTER_ORDER
    if spec == "quick":
        return QUICK_FILTERS
    if spec == "none":
        return ()
    names = tuple(s.strip() for s in spec.split(",") if s.strip())
    for name in names:
        if name not in FILTERS:
            raise SearchError(f"unknown filter {name!r}; known: {', '.join(FILTERS)}")
    return names


def _parse_order_range(spec: str) -> tuple[int, int]:
    try:
        if ".." in spec:
            lo, hi = spec.split("..")
            return int(lo), int(hi)
        n = int(spec)
        return n, n
    except ValueError:
        raise SearchError(f"invalid order range {spec!r}; use N or A..B") from None


def _default_jobs() -> int:
    env = os.environ.get(_JOBS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            print(f"warning: ignoring non-integer {_JOBS_ENV}={env!r}", file=sys.stderr)
    return 1


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_check(args) -> int:
    t0 = time.perf_counter()
    g = _read_graph_arg(args)
    doc = build_document(g, time.perf_counter() - t0)
    if args.json:
        print(json.dumps(doc.to_json_obj()))
    else:
        print(doc.to_text())
    return EXIT_OK if doc.report["squco"] else EXIT_NOT_SQUCO


def cmd_make(args) -> int:
    if args.name:
        g = named(args.name)
    elif args.circulant:
        head, _, tail = args.circulant.partition(":")
        n = int(head)
        conns = {int(s) for s in tail.split(",") if s}
        g = circulant(n, conns)
    elif args.lcf:
        head, _, tail = args.lcf.partition(":")
        steps = [int(s) for s in head.split(",") if s]
        g = lcf(steps, int(tail))
    else:
        raise GraphError("one of --name, --circulant, --lcf is required")
    print(g6_encode(g))
    return EXIT_OK


def cmd_filter(args) -> int:
    from .checks import is_squco

    names = _parse_filter_names(args.filters)
    read = passed = malformed = 0
    rejected: dict[str, int] = {}
    for lineno, line in enumerate(sys.stdin, start=1):
        if not line.strip():
            continue
        read += 1
        try:
            g = g6_decode(line)
        except Graph6Error as exc:
            malformed += 1
            print(f"warning: line {lineno}: {exc}", file=sys.stderr)
            continue
        verdict = None
        for name in names:
            ok, _ = FILTERS[name](g)
            if not ok:
                verdict = name
                break
        if verdict is None and args.squco and not is_squco(g):
            verdict = "squco"
        if verdict is None:
            passed += 1
            sys.stdout.write(line if line.endswith("\n") else line + "\n")
        else:
            rejected[verdict] = rejected.get(verdict, 0) + 1
    parts = [f"read={read}", f"passed={passed}"]
    parts += [f"rejected[{k}]={v}" for k, v in sorted(rejected.items())]
    if malformed:
        parts.append(f"malformed={malformed}")
    print(" ".join(parts), file=sys.stderr)
    if malformed and not args.lenient:
        return EXIT_INPUT
    return EXIT_OK


def cmd_enumerate(args) -> int:
    n_min, n_max = _parse_order_range(args.orders)
    config = SearchConfig(
        n_min=n_min,
        n_max=n_max,
        min_girth=args.min_girth,
        max_girth=args.max_girth,
        max_degree=args.max_degree,
        leaf_filters=_parse_filter_names(args.filters),
        squco_check=args.squco,
        jobs=args.jobs if args.jobs is not None else _default_jobs(),
        checkpoint_path=args.checkpoint,
        split_order=args.split_order,
    )
    show_progress = args.progress or (not args.no_progress and sys.stderr.isatty())

    def hook(done: int, total: int):
        if show_progress:
            print(f"progress: {done}/{total} branches", file=sys.stderr)

    summary = enumerate_graphs(config, branch_hook=hook)
    for item in summary.accepted:
        print(item.g6)
    print(summary.format_text(), file=sys.stderr)
    return EXIT_OK


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="squco",
        description="square-complementary graph toolkit: check graphs, filter "
                    "graph6 streams, enumerate isomorph-free, build named graphs")
    parser.add_argument("--version", action="version", version=f"squco {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="full property report for one graph")
    p.add_argument("--name", help="named constructor (e.g. c7, franklin)")
    p.add_argument("--g6", help="graph6 string")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("make", help="construct a graph, print its graph6 line")
    p.add_argument("--name")
    p.add_argument("--circulant", metavar="N:S1,S2,...")
    p.add_argument("--lcf", metavar="STEPS:REPEATS")
    p.set_defaults(fn=cmd_make)

    p = sub.add_parser("filter", help="pass through graph6 lines surviving filters")
    p.add_argument("--filters", default="leaf",
                   help="leaf | quick | none | comma-separated names (default: leaf)")
    p.add_argument("--squco", action="store_true", help="require the full squco verdict")
    p.add_argument("--lenient", action="store_true",
                   help="exit 0 even when malformed lines were skipped")
    p.set_defaults(fn=cmd_filter)

    p = sub.add_parser("enumerate", help="isomorph-free exhaustive enumeration")
    p.add_argument("-n", "--orders", required=True, metavar="A..B",
                   help="order range, e.g. 7 or 1..9")
    p.add_argument("--min-girth", type=int, default=None,
                   help="forbid cycles shorter than this during generation")
    p.add_argument("--max-girth", type=int, default=None,
                   help="leaf filter: keep girth <= this")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--filters", default="none",
                   help="leaf | quick | none | comma-separated names (default: none)")
    p.add_argument("--squco", action="store_true", help="keep only squco graphs")
    p.add_argument("--jobs", type=int, default=None,
                   help=f"worker processes (default: ${_JOBS_ENV} or 1)")
    p.add_argument("--checkpoint", default=None, help="resumable checkpoint file")
    p.add_argument("--split-order", type=int, default=None,
                   help="order whose representatives become parallel branches")
    p.add_argument("--progress", action="store_true", help="print branch progress")
    p.add_argument("--no-progress", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (Graph6Error, GraphError, SearchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CheckpointError as exc:
        print(f"checkpoint error: {exc}", file=sys.stderr)
        return EXIT_CHECKPOINT


def run() -> None:  # console-script entry point
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    run()
