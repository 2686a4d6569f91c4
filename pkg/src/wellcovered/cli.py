"""Command-line front end.

Subcommands: analyze a single graph, build and report a direct product,
generate family or corpus graphs, run the claim suite, and scan factor
pairs for well-covered products.  Output is JSON or a line-per-field text
rendering of the same data, and is byte-stable for fixed inputs apart from
the version field.

Exit codes: 0 success, 1 usage or parse error, 2 a claim counterexample
was found, 3 a resource cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Iterable, Iterator

from . import __version__, kernel
from .claims import (
    CLAIM_IDS,
    REGISTRY,
    corpus_graph_n_instances,
    corpus_pair_instances,
    corpus_single_instances,
    run_suite_parallel,
    targeted_instances,
    verify,
)
from .families import FamilySpec
from .formats import from_graph6, load_graph_text, to_graph6
from .graphs import (
    CapacityError,
    Graph,
    girth,
    is_bipartite,
    is_complete,
    is_connected,
    is_regular,
    to_vertices,
)
from .independence import isolatable_vertices, well_covered_report
from .kn_partitions import DEFAULT_NODE_BUDGET, kn_alpha_i
from .products import direct_product
from .verdicts import COUNTEREXAMPLE


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; this tool reserves 2
    for counterexamples, so usage failures are remapped to 1."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_graph_arg(text: str) -> Graph:
    """Accept a family spec (cycle:7), an @file path, or a graph6 string."""
    if text.startswith("@"):
        return load_graph_text(Path(text[1:]).read_text())
    head = text.partition(":")[0]
    if head in FamilySpec._KINDS:
        return FamilySpec.parse(text).build()
    try:
        return from_graph6(text)
    except ValueError:
        raise ValueError(
            f"cannot parse graph input {text!r}: not a family spec, @file, or graph6 string"
        ) from None


def _json_girth(value) -> int | str:
    return "infinite" if value == float("inf") else int(value)


def _render(data: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(data, indent=2)
    lines = []
    for key, value in data.items():
        if isinstance(value, bool):
            lines.append(f"{key}: {'true' if value else 'false'}")
        elif value is None:
            lines.append(f"{key}: null")
        elif isinstance(value, (dict, list)):
            lines.append(f"{key}: {json.dumps(value)}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _analyze_payload(g: Graph) -> dict:
    data = {"version": __version__}
    data.update(well_covered_report(g).to_json())
    data["girth"] = _json_girth(girth(g))
    data["regular_degree"] = is_regular(g)
    data["bipartite"] = is_bipartite(g) is not None
    data["connected"] = is_connected(g)
    data["isolatable"] = to_vertices(isolatable_vertices(g))
    return data


def _cmd_analyze(args: argparse.Namespace) -> int:
    g = parse_graph_arg(args.graph)
    print(_render(_analyze_payload(g), args.format))
    return 0


def _cmd_product(args: argparse.Namespace) -> int:
    g = parse_graph_arg(args.g)
    h = parse_graph_arg(args.h)
    prod = direct_product(g, h)
    data = {"version": __version__}
    data.update(prod.to_json_sidecar())
    data.update(well_covered_report(prod.graph).to_json())
    if is_complete(h) and h.n >= 2:
        data["partition_engine"] = kn_alpha_i(g, h.n, args.node_budget).to_json()
    elif is_complete(g) and g.n >= 2:
        data["partition_engine"] = kn_alpha_i(h, g.n, args.node_budget).to_json()
    status = 0
    if args.check:
        verdict = verify("wc_direct", (g, h))
        data["check"] = verdict.to_json()
        if verdict.status == COUNTEREXAMPLE:
            status = 2
    print(_render(data, args.format))
    return status


def _passes_filter(g: Graph, name: str | None) -> bool:
    if name is None:
        return True
    report = well_covered_report(g)
    if name == "wc":
        return report.well_covered
    if name == "vwc":
        return report.very_well_covered
    return report.well_covered and not report.very_well_covered


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.specs:
        graphs: Iterable[Graph] = (FamilySpec.parse(s).build() for s in args.specs)
    elif args.max_n is not None:
        graphs = corpus_single_instances(args.max_n, args.reps)
    else:
        raise ValueError("nothing to generate: pass family specs or --max-n")
    emitted = [to_graph6(g) for g in graphs if _passes_filter(g, args.filter)]
    if args.format == "json":
        print(json.dumps({"version": __version__, "count": len(emitted), "graphs": emitted}, indent=2))
    else:
        print(f"version: {__version__}")
        for line in emitted:
            print(line)
    return 0


def _instances(args: argparse.Namespace) -> Iterator:
    if not args.no_targeted:
        yield from targeted_instances()
    yield from corpus_single_instances(args.max_n, args.reps)
    yield from corpus_pair_instances(args.max_n, args.cap, args.reps)
    yield from corpus_graph_n_instances(args.max_n, tuple(args.orders), args.reps)


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.list:
        for claim_id in CLAIM_IDS:
            print(f"{claim_id}: {REGISTRY[claim_id].summary}")
        return 0
    ids = args.claims or list(CLAIM_IDS)
    unknown = [c for c in ids if c not in REGISTRY]
    if unknown:
        raise ValueError(f"unknown claim ids: {', '.join(unknown)}")
    if not 1 <= args.cap <= 64:
        raise ValueError("--cap must be between 1 and 64")
    report = run_suite_parallel(
        ids, _instances(args), jobs=args.jobs, node_budget=args.node_budget
    )
    data = {
        "version": __version__,
        "passed": report.passed,
        "counterexample_count": report.counterexample_count,
        "claims": report.to_json(),
    }
    print(_render(data, args.format))
    return 0 if report.passed else 2


def _scan_row(pair: tuple[Graph, Graph]) -> dict:
    g, h = pair
    prod = direct_product(g, h)
    size = kernel.well_covered_size(prod.graph.adj)
    wc = size >= 0
    vwc = wc and 2 * size == prod.graph.n and all(prod.graph.adj[v] for v in range(prod.graph.n))
    return {
        "g": to_graph6(g),
        "h": to_graph6(h),
        "order": prod.graph.n,
        "well_covered": wc,
        "very_well_covered": vwc,
    }


def _row_passes(row: dict, name: str | None) -> bool:
    if name is None:
        return True
    if name == "wc":
        return row["well_covered"]
    if name == "vwc":
        return row["very_well_covered"]
    return row["well_covered"] and not row["very_well_covered"]


def _cmd_scan(args: argparse.Namespace) -> int:
    if not 1 <= args.cap <= 64:
        raise ValueError("--cap must be between 1 and 64")
    pairs = list(corpus_pair_instances(args.max_n, args.cap, args.reps))
    if args.jobs > 1:
        import multiprocessing

        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(args.jobs) as pool:
            rows = list(pool.imap(_scan_row, pairs, chunksize=64))
    else:
        rows = [_scan_row(p) for p in pairs]
    rows = [r for r in rows if _row_passes(r, args.filter)]
    if args.format == "json":
        print(json.dumps({"version": __version__, "pairs": rows}, indent=2))
    else:
        print(f"version: {__version__}")
        for r in rows:
            flags = " ".join(
                f"{k}={'true' if v else 'false'}" if isinstance(v, bool) else f"{k}={v}"
                for k, v in r.items()
            )
            print(flags)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="wellcovered", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"wellcovered {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("analyze", help="independence and structure report for one graph")
    p.add_argument("graph", help="family spec, @file, or graph6 string")
    common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("product", help="build a direct product and report it")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--check", action="store_true", help="also verify the factor conditions")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    common(p)
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("generate", help="emit family graphs or a small-graph corpus as graph6")
    p.add_argument("specs", nargs="*", help="family specs such as h:4,2 or cycle:7")
    p.add_argument("--max-n", type=int, default=None, help="stream the connected corpus instead")
    p.add_argument("--reps", action="store_true", help="one graph per isomorphism class")
    p.add_argument("--filter", choices=("wc", "vwc", "wc-not-vwc"), default=None)
    common(p)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("verify", help="run the claim suite over corpora and targeted instances")
    p.add_argument("claims", nargs="*", help="claim ids (default: all)")
    p.add_argument("--list", action="store_true", help="list claim ids and exit")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--cap", type=int, default=36, help="max product order for pair instances")
    p.add_argument("--orders", type=lambda s: [int(x) for x in s.split(",")], default=[2, 3])
    p.add_argument("--reps", action="store_true", help="pair scan over isomorphism classes only")
    p.add_argument("--no-targeted", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", help="flag well-covered products over all factor pairs in range")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--cap", type=int, default=36)
    p.add_argument("--filter", choices=("wc", "vwc", "wc-not-vwc"), default=None)
    p.add_argument("--reps", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=_cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"wellcovered: resource cap: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, OSError) as exc:
        print(f"wellcovered: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
