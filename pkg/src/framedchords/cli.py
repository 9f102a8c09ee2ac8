"""Command-line entry point: ``framedchords <command> ...``.

Exit codes: 0 success, 1 a property or table check failed, 2 bad usage or
unparsable input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .chromatic import RULES, framed_chromatic
from .diagrams import DiagramFormatError, enumerate_diagrams, parse_diagram
from .dimensions import MAX_ORDER, PUBLISHED_TABLES, OrderBoundError, report
from .graphs import GraphBoundError, GraphFormatError, enumerate_graphs, parse_graph
from .linalg import DEFAULT_PRIMES
from .reduction import reduce_diagram, reduce_graph
from .relations import relation_set
from .verify import SUITE_NAMES, run_suite

SPACES = ("A", "M", "CoM", "G", "H", "CoH", "PCoH")


class UsageError(Exception):
    pass


def _primes(text: str) -> tuple:
    try:
        primes = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from None
    if not primes:
        raise argparse.ArgumentTypeError("empty prime list")
    return primes


def _is_graph_code(text: str) -> bool:
    return text.count(";") == 2


# -- commands --------------------------------------------------------------

def cmd_dims(args, out) -> int:
    if args.min is None:
        args.min = min(1, args.max)
    if args.min > args.max:
        raise UsageError("--min exceeds --max")
    if args.max > args.bound:
        raise UsageError(f"--max {args.max} exceeds the order bound {args.bound}")
    if args.assert_paper and args.space not in PUBLISHED_TABLES:
        raise UsageError(f"no published table for space {args.space}")
    kw = {}
    if args.space not in ("PCoH",):
        kw = {"exact": True if args.exact else None, "primes": args.primes}
    reports = [report(args.space, n, **kw) for n in range(args.min, args.max + 1)]
    if args.format == "records":
        for r in reports:
            print(r.record(), file=out)
    else:
        header = ("space", "n", "basis", "generated", "distinct", "rank", "dim", "method")
        rows = [header] + [
            (r.space, r.order, r.basis_size, r.relations_generated, r.relations_distinct,
             r.rank, r.dimension, "exact" if r.exact else f"mod {len(r.primes)} primes")
            for r in reports]
        widths = [max(len(str(row[i])) for row in rows) for i in range(len(header))]
        for row in rows:
            print("  ".join(str(x).rjust(w) for x, w in zip(row, widths)).rstrip(), file=out)
        print(f"{args.space}: " + " ".join(str(r.dimension) for r in reports), file=out)
    if args.assert_paper:
        expected = PUBLISHED_TABLES[args.space]
        bad = [(r.order, r.dimension, expected[r.order - 1]) for r in reports
               if 1 <= r.order <= len(expected) and r.dimension != expected[r.order - 1]]
        for n, got, want in bad:
            print(f"MISMATCH {args.space} n={n}: computed {got}, published {want}", file=out)
        if bad:
            return 1
        print(f"published values for {args.space} reproduced", file=out)
    return 0


def cmd_verify(args, out) -> int:
    print(f"suite={args.suite} seed={args.seed}", file=out)
    kw = {}
    if args.suite == "chromatic-4t":
        kw["rule"] = args.rule
    traces = [] if (args.traces and args.suite == "reduction") else None
    if traces is not None:
        kw["traces"] = traces
    results = run_suite(args.suite, args.max, args.seed, **kw)
    if traces:
        for x, trace in traces:
            print(f"# {x.code}", file=out)
            print(trace.to_text(), file=out)
    failed = 0
    for r in results:
        if r.passed:
            print(f"PASS  {r.name}  ({r.detail})", file=out)
        else:
            failed += 1
            print(f"FAIL  {r.name}  {r.detail}", file=out)
    print(f"{len(results) - failed}/{len(results)} properties passed", file=out)
    return 1 if failed else 0


def cmd_reduce(args, out) -> int:
    if _is_graph_code(args.code):
        trace = reduce_graph(parse_graph(args.code))
    else:
        trace = reduce_diagram(parse_diagram(args.code))
    text = trace.to_text()
    if text:
        print(text, file=out)
    return 0


def cmd_chromatic(args, out) -> int:
    print(framed_chromatic(parse_graph(args.code), args.rule), file=out)
    return 0


def cmd_export(args, out) -> int:
    if args.space not in ("A", "M", "G", "H"):
        raise UsageError("export needs one of A, M, G, H")
    if args.n < 0 or args.n > args.bound:
        raise UsageError(f"order {args.n} outside 0..{args.bound}")
    matrix, index = relation_set(args.space, args.n).export(Path(args.path))
    print(matrix, file=out)
    print(index, file=out)
    return 0


def cmd_enumerate(args, out) -> int:
    if args.n < 0:
        raise UsageError("order must be non-negative")
    if args.kind == "diagrams":
        items = enumerate_diagrams(args.n, args.framed)
    else:
        items = enumerate_graphs(args.n, args.framed)
    if args.count:
        print(len(items), file=out)
    else:
        for x in items:
            print(x.code, file=out)
    return 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="framedchords",
                                description="Framed chord diagrams, framed graphs and their invariants.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dims", help="dimensions of graded pieces")
    d.add_argument("--space", choices=SPACES, required=True)
    d.add_argument("--min", type=int, default=None, help="smallest order (default 1, or 0 with --max 0)")
    d.add_argument("--max", type=int, default=MAX_ORDER)
    d.add_argument("--bound", type=int, default=MAX_ORDER, help="largest order accepted")
    d.add_argument("--assert-paper", action="store_true",
                   help="exit 1 unless the published table values are reproduced")
    d.add_argument("--format", choices=("table", "records"), default="table")
    d.add_argument("--exact", action="store_true", help="rational elimination at every order")
    d.add_argument("--primes", type=_primes, default=DEFAULT_PRIMES)
    d.set_defaults(func=cmd_dims)

    v = sub.add_parser("verify", help="run a property suite")
    v.add_argument("suite", choices=SUITE_NAMES)
    v.add_argument("--max", type=int, default=None, help="largest order checked (suite default if omitted)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--rule", choices=sorted(RULES), default="literal",
                   help="skein rule for chromatic-4t")
    v.add_argument("--traces", action="store_true", help="print reduction traces")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("reduce", help="rewrite a diagram or graph as black-by-white products")
    r.add_argument("code")
    r.set_defaults(func=cmd_reduce)

    c = sub.add_parser("chromatic", help="framed chromatic polynomial of a graph code")
    c.add_argument("code")
    c.add_argument("--rule", choices=sorted(RULES), default="literal")
    c.set_defaults(func=cmd_chromatic)

    e = sub.add_parser("export", help="write a relation matrix and its column index")
    e.add_argument("space")
    e.add_argument("n", type=int)
    e.add_argument("path")
    e.add_argument("--bound", type=int, default=MAX_ORDER)
    e.set_defaults(func=cmd_export)

    n = sub.add_parser("enumerate", help="list canonical diagrams or graphs")
    n.add_argument("kind", choices=("diagrams", "graphs"))
    n.add_argument("n", type=int)
    n.add_argument("--framed", action="store_true")
    n.add_argument("--count", action="store_true", help="print only the number of items")
    n.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args, out)
    except (UsageError, DiagramFormatError, GraphFormatError, GraphBoundError, OrderBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
