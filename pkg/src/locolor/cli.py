"""Command-line interface for the exact small-graph library and claim checks.

Exit codes: 0 when every requested check passes (queries count as
answered), 1 when a verification fails, 2 for usage or format errors.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog
from .claims import REGISTRY
from .colouring import chromatic_number, clique_number, max_clique
from .graph import Graph, GraphError
from .graphio import FormatError, from_adjacency_text, from_graph6, emit_graph
from .homomorphism import find_hom, find_injective_hom
from .localstruct import classify_pair, is_a_locally_b_partite
from .smallgraphs import enumerate_smallest_4chromatic_locally_bipartite

USAGE_ERROR = 2


def load_graph_source(source: str) -> Graph:
    """A graph from '@catalog:NAME', a file path, or '-' (graph6 on stdin)."""
    if source.startswith("@catalog:"):
        return catalog.named(source[len("@catalog:") :])
    if source == "-":
        return from_graph6(sys.stdin.read().strip())
    with open(source, "rb") as handle:
        data = handle.read()
    head = b""
    for line in data.splitlines():
        body = line.split(b"#", 1)[0].strip()
        if body:
            head = body
            break
    if head.split() and head.split()[0].isdigit():
        return from_adjacency_text(data)
    return from_graph6(data)


def _cmd_verify(args) -> int:
    report = REGISTRY.run(args.filter, seed=args.seed, runtime_limit=args.runtime)
    if args.report == "json":
        print(report.to_json())
    else:
        print(report.to_text())
    if args.artifacts:
        from .report import write_artifacts

        for path in write_artifacts(report, args.artifacts):
            print(f"wrote {path}", file=sys.stderr)
    return 0 if report.ok else 1


def _cmd_chi(args) -> int:
    print(chromatic_number(load_graph_source(args.graph)))
    return 0


def _cmd_clique(args) -> int:
    g = load_graph_source(args.graph)
    witness = sorted(max_clique(g))
    print(f"{len(witness)}  {' '.join(map(str, witness))}".rstrip())
    return 0


def _cmd_local(args) -> int:
    g = load_graph_source(args.graph)
    check = is_a_locally_b_partite(g, args.a, args.b)
    if check.holds:
        print(f"member of F({args.a},{args.b})")
    else:
        clique = " ".join(map(str, check.witness))
        print(f"not in F({args.a},{args.b}): violating clique {clique}")
    return 0


def _cmd_pair(args) -> int:
    g = load_graph_source(args.graph)
    result = classify_pair(g, args.u, args.v, args.b)
    print(f"{result.kind.value} (level {result.b})")
    return 0


def _cmd_hom(args) -> int:
    src = load_graph_source(args.source)
    dst = load_graph_source(args.target)
    hom = find_injective_hom(src, dst) if args.injective else find_hom(src, dst)
    if hom is None:
        print("none")
    else:
        print(" ".join(map(str, hom.mapping)))
    return 0


def _cmd_catalog(args) -> int:
    if args.action == "list" or args.name is None and args.action is None:
        for name in catalog.catalog_names():
            g = catalog.named(name)
            print(f"{name:<12} {g.n:>3} vertices {g.edge_count:>3} edges")
        return 0
    name = args.name if args.action == "show" else args.action
    entry = catalog.entry(name)
    g = entry.graph
    print(f"{entry.identifier}: {g.n} vertices, {g.edge_count} edges")
    labels = ", ".join(f"{k}={v}" for k, v in sorted(entry.labels.items()))
    print(f"labels: {labels}")
    for u, v in g.edges():
        print(f"{u} {v}")
    return 0


def _cmd_enumerate(args) -> int:
    if args.what != "smallest":
        print(f"unknown enumeration {args.what!r}", file=sys.stderr)
        return USAGE_ERROR
    report = enumerate_smallest_4chromatic_locally_bipartite(args.max_n)
    for n in sorted(report.counts):
        print(f"n={n}: {report.counts[n]} locally bipartite graphs with chromatic number >= 4")
    if report.max_n >= 7:
        print(f"H0 among the 7-vertex witnesses: {report.h0_among_witnesses}")
    return 0


def _cmd_export(args) -> int:
    sys.stdout.write(emit_graph(catalog.named(args.name), args.format))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locolor",
        description="exact small-graph computations and claim verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the claim registry")
    verify.add_argument("--filter", default="*", help="glob over claim ids")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--report", choices=("json", "text"), default="text")
    verify.add_argument(
        "--runtime",
        choices=("instant", "seconds", "minutes"),
        default="seconds",
        help="include claims up to this runtime class",
    )
    verify.add_argument(
        "--artifacts", metavar="DIR", help="also write report.json, results.csv and figures"
    )
    verify.set_defaults(func=_cmd_verify)

    chi = sub.add_parser("chi", help="chromatic number of a graph")
    chi.add_argument("graph")
    chi.set_defaults(func=_cmd_chi)

    clique = sub.add_parser("clique", help="maximum clique of a graph")
    clique.add_argument("graph")
    clique.set_defaults(func=_cmd_clique)

    local = sub.add_parser("local", help="membership in the family F(a,b)")
    local.add_argument("a", type=int)
    local.add_argument("b", type=int)
    local.add_argument("graph")
    local.set_defaults(func=_cmd_local)

    pair = sub.add_parser("pair", help="classify a vertex pair at clique level b")
    pair.add_argument("u", type=int)
    pair.add_argument("v", type=int)
    pair.add_argument("b", type=int)
    pair.add_argument("graph")
    pair.set_defaults(func=_cmd_pair)

    hom = sub.add_parser("hom", help="search for a homomorphism between graphs")
    hom.add_argument("source")
    hom.add_argument("target")
    hom.add_argument("--injective", action="store_true")
    hom.set_defaults(func=_cmd_hom)

    cat = sub.add_parser("catalog", help="list or show the named graphs")
    cat.add_argument("action", nargs="?", help="'list' or 'show'")
    cat.add_argument("name", nargs="?")
    cat.set_defaults(func=_cmd_catalog)

    enum = sub.add_parser("enumerate", help="exhaustive small-graph enumerations")
    enum.add_argument("what")
    enum.add_argument("--max-n", type=int, required=True)
    enum.set_defaults(func=_cmd_enumerate)

    export = sub.add_parser("export", help="emit a catalog graph in a given format")
    export.add_argument("name")
    export.add_argument("--format", choices=("graph6", "adjlist", "dot"), default="graph6")
    export.set_defaults(func=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
