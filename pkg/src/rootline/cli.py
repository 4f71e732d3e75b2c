"""Command-line frontend: classification with certificates, catalog
emission, embedding reports, tree reduction, and class enumeration.

Inputs are graph6 (one graph per line) or edge lists (`u v` pairs, optional
`u v k` multiplicity, lone `v` for an isolated vertex); `-` reads stdin.
JSON is the machine default; a terminal gets text.  Output is
byte-deterministic for fixed input and flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from . import __version__
from .catalog import get_catalog
from .embedding import cotriangular_closure, minimal_embedding, twin_classes, universal_embedding
from .f2core import SpaceTypeError, classify_type, isotropic_radical, radical_of_f
from .graphkit import (
    GraphError,
    MultiGraph,
    ParseError,
    SimpleGraph,
    canonical,
    emit_dot,
    emit_edgelist,
    emit_graph6,
    parse_graph_auto,
    parse_edgelist,
    parse_graph6,
)
from .mutation import (
    ClassBoundExceeded,
    DEFAULT_MAX_CLASSES,
    equivalence_class,
    log_to_json,
    reduce_to_tree,
    replay_log,
)
from .oracle import OracleBudgetError, oracle_is_multigraph_line_graph
from .recognition import (
    RootCertificate,
    WitnessCertificate,
    certificate_to_json,
    is_generalized_line_graph,
    is_ordinary_line_graph,
    recognize_multigraph_line_graph,
    verify_certificate,
)

MAX_CLASSES_ENV = "ROOTLINE_MAX_CLASSES"


class UsageError(ValueError):
    pass


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _parse_graphs(text: str, fmt: str) -> list[MultiGraph]:
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        graphs = [parse_graph6(ln, i) for i, ln in enumerate(lines, start=1)]
        return [MultiGraph(g.n, tuple((u, v, 1) for u, v in g.edges())) for g in graphs]
    if fmt == "edgelist":
        return [parse_edgelist(text)]
    return parse_graph_auto(text)


def _simple(mg: MultiGraph) -> SimpleGraph:
    if any(m > 1 for _, _, m in mg.edges):
        raise UsageError("this subcommand takes a simple graph; found multiplicities above 1")
    return mg.underlying_simple()


def _default_format(kind: str) -> str:
    if kind == "report":
        return "text" if sys.stdout.isatty() else "json"
    return kind


def _emit_lines(lines: list[str]) -> None:
    sys.stdout.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# classify


def _certificate_payload(cert, vertex_map: list[int]) -> dict:
    """Certificate JSON with vertices translated back to input labels."""
    if isinstance(cert, RootCertificate):
        return {
            "kind": "root",
            "multigraph": {
                "n": cert.delta.n,
                "edges": [[u, v, m] for u, v, m in cert.delta.edges],
            },
            "map": [vertex_map[x] for x in cert.edge_to_vertex],
        }
    return {
        "kind": "witness",
        "vertices": [vertex_map[v] for v in cert.vertices],
        "catalog_index": cert.catalog_index,
    }


def _classify_one(g: SimpleGraph, verify: bool, use_oracle: bool) -> dict:
    cat = get_catalog()
    components = []
    all_line_graphs = True
    for comp in g.components():
        sub = g.induced(comp)
        cert = recognize_multigraph_line_graph(sub, cat)
        is_lg = isinstance(cert, RootCertificate)
        ordinary, _ = is_ordinary_line_graph(sub, cat)
        generalized, _, _ = is_generalized_line_graph(sub, cat)
        all_line_graphs &= is_lg
        entry = {
            "vertices": list(comp),
            "multigraph_line_graph": is_lg,
            "ordinary_line_graph": ordinary,
            "generalized_line_graph": generalized,
            "certificate": _certificate_payload(cert, list(comp)),
        }
        if verify:
            entry["verified"] = verify_certificate(sub, cert, cat)
            if not entry["verified"]:
                raise UsageError("internal error: certificate failed verification")
        if use_oracle:
            try:
                root = oracle_is_multigraph_line_graph(sub)
            except OracleBudgetError as exc:
                raise UsageError(f"--oracle: {exc}") from exc
            agrees = (root is not None) == is_lg
            entry["oracle_agrees"] = agrees
            if not agrees:
                raise UsageError("internal error: oracle disagrees with the recognizer")
        components.append(entry)
    return {"n": g.n, "all_line_graphs": all_line_graphs, "components": components}


def cmd_classify(args: argparse.Namespace) -> int:
    text = _read_input(args.input)
    graphs = [_simple(mg) for mg in _parse_graphs(text, args.input_format)]
    jobs = max(1, args.jobs)
    if jobs > 1 and len(graphs) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(lambda g: _classify_one(g, args.verify, args.oracle), graphs))
    else:
        reports = [_classify_one(g, args.verify, args.oracle) for g in graphs]
    fmt = args.format or _default_format("report")
    lines = []
    for i, rep in enumerate(reports):
        rep_out = {"graph": i, **rep}
        if fmt == "json":
            lines.append(json.dumps(rep_out, sort_keys=True))
        else:
            flags = [
                ("line graph of a multigraph", rep["all_line_graphs"]),
                ("ordinary line graph", all(c["ordinary_line_graph"] for c in rep["components"])),
                ("generalized line graph", all(c["generalized_line_graph"] for c in rep["components"])),
            ]
            lines.append(f"graph {i}: n={rep['n']}, components={len(rep['components'])}")
            for name, val in flags:
                lines.append(f"  {name}: {'yes' if val else 'no'}")
            for c in rep["components"]:
                lines.append(f"  component {c['vertices']}: certificate {json.dumps(c['certificate'], sort_keys=True)}")
    _emit_lines(lines)
    return 0 if all(rep["all_line_graphs"] for rep in reports) else 1


# ---------------------------------------------------------------------------
# catalog


def cmd_catalog(args: argparse.Namespace) -> int:
    cat = get_catalog()
    lists = {
        "e6": cat.e6_class,
        "beineke": cat.beineke,
        "glg": cat.glg,
        "h": cat.h_list,
        "g": cat.g_list,
    }
    if args.list not in lists:
        raise UsageError(f"unknown list {args.list!r}; choose from {sorted(lists)}")
    graphs = lists[args.list]
    fmt = args.format or "graph6"
    lines = [f"# {args.list} {len(graphs)}"]
    if fmt == "graph6":
        lines += [emit_graph6(g) for g in graphs]
    elif fmt == "edgelist":
        for i, g in enumerate(graphs):
            lines.append(f"# {args.list}[{i}]")
            lines.append(emit_edgelist(g).rstrip("\n"))
    elif fmt == "dot":
        for i, g in enumerate(graphs):
            lines.append(emit_dot(g, name=f"{args.list}_{i}").rstrip("\n"))
    elif fmt == "json":
        lines = [
            json.dumps(
                {
                    "list": args.list,
                    "count": len(graphs),
                    "graphs": [emit_graph6(g) for g in graphs],
                },
                sort_keys=True,
            )
        ]
    else:
        raise UsageError(f"catalog cannot emit format {fmt!r}")
    _emit_lines(lines)
    return 0


# ---------------------------------------------------------------------------
# embed


def _embed_report(g: SimpleGraph) -> dict:
    eg = universal_embedding(g)
    meg, _ = minimal_embedding(g)
    try:
        tp = classify_type(eg.space)
        type_name = tp.sign if not tp.is_degenerate else f"{tp.sign} (radical {tp.radical_dim})"
    except SpaceTypeError:
        type_name = "none (odd rank)"
    closure_size: Optional[int] = None
    if meg.space.dim <= 20:
        closure_size = len(cotriangular_closure(meg))
    return {
        "n": g.n,
        "dim": eg.space.dim,
        "f_radical_dim": radical_of_f(eg.space).dim,
        "isotropic_radical_dim": isotropic_radical(eg.space).dim,
        "type": type_name,
        "minimal_dim": meg.space.dim,
        "twin_classes": sorted(sorted(c) for c in twin_classes(g)),
        "closure_size": closure_size,
    }


def cmd_embed(args: argparse.Namespace) -> int:
    text = _read_input(args.input)
    graphs = [_simple(mg) for mg in _parse_graphs(text, args.input_format)]
    fmt = args.format or _default_format("report")
    lines = []
    for i, g in enumerate(graphs):
        rep = {"graph": i, **_embed_report(g)}
        if fmt == "json":
            lines.append(json.dumps(rep, sort_keys=True))
        else:
            lines.append(
                f"graph {i}: dim={rep['dim']} f_radical={rep['f_radical_dim']} "
                f"isotropic_radical={rep['isotropic_radical_dim']} type={rep['type']} "
                f"minimal_dim={rep['minimal_dim']} closure={rep['closure_size']}"
            )
            lines.append(f"  twin classes: {rep['twin_classes']}")
    _emit_lines(lines)
    return 0


# ---------------------------------------------------------------------------
# reduce


def cmd_reduce(args: argparse.Namespace) -> int:
    text = _read_input(args.input)
    graphs = [_simple(mg) for mg in _parse_graphs(text, args.input_format)]
    fmt = args.format or _default_format("report")
    lines = []
    for i, g in enumerate(graphs):
        if not g.is_connected():
            raise UsageError(f"graph {i}: tree reduction needs a connected graph")
        tree, log = reduce_to_tree(g)
        if args.verify:
            replayed = replay_log(universal_embedding(g), log)
            if replayed.induced_graph().adj != tree.adj:
                raise UsageError("internal error: reduction log failed replay")
        payload = {
            "graph": i,
            "tree_graph6": emit_graph6(tree),
            "tree_edges": sorted(tree.edges()),
            "log": [[v, w] for v, w in log],
        }
        if fmt == "json":
            lines.append(json.dumps(payload, sort_keys=True))
        else:
            lines.append(f"graph {i}: tree {emit_graph6(tree)} edges {sorted(tree.edges())}")
            lines.append(f"  log: {log_to_json(log)}")
    _emit_lines(lines)
    return 0


# ---------------------------------------------------------------------------
# class enumeration


def cmd_class(args: argparse.Namespace) -> int:
    text = _read_input(args.input)
    graphs = [_simple(mg) for mg in _parse_graphs(text, args.input_format)]
    bound = args.max_classes
    if bound is None:
        bound = int(os.environ.get(MAX_CLASSES_ENV, DEFAULT_MAX_CLASSES))
    fmt = args.format or "graph6"
    lines = []
    for i, g in enumerate(graphs):
        if not g.is_connected():
            raise UsageError(f"graph {i}: class enumeration needs a connected graph")
        try:
            forms = equivalence_class(g, max_classes=bound)
        except ClassBoundExceeded as exc:
            raise UsageError(f"graph {i}: {exc}") from exc
        codes = sorted(emit_graph6(form.to_graph()) for form in forms)
        if fmt == "json":
            lines.append(json.dumps({"graph": i, "count": len(codes), "members": codes}, sort_keys=True))
        else:
            lines.append(f"# class {len(codes)}")
            lines += codes
    _emit_lines(lines)
    return 0


# ---------------------------------------------------------------------------
# argument plumbing


def _add_common(p: argparse.ArgumentParser, report: bool = True) -> None:
    p.add_argument("input", nargs="?", default="-", help="input file, or - for stdin")
    p.add_argument(
        "--input-format",
        choices=["auto", "graph6", "edgelist"],
        default="auto",
        help="input format (default: auto-detect)",
    )
    p.add_argument("--format", choices=["json", "text", "graph6", "dot", "edgelist"], default=None)
    p.add_argument("--verify", action="store_true", help="re-check emitted certificates from scratch")
    p.add_argument("--oracle", action="store_true", help="cross-check with the brute-force oracle")
    p.add_argument("--jobs", type=int, default=1, help="parallelism degree for multi-graph inputs")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootline",
        description="line-graph recognition for multigraphs, with certificates",
    )
    parser.add_argument("--version", action="version", version=f"rootline {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="decide the three line-graph properties, with certificates")
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("catalog", help="emit a frozen obstruction list")
    p.add_argument("list", choices=["e6", "beineke", "glg", "h", "g"])
    p.add_argument("--format", choices=["graph6", "edgelist", "dot", "json"], default=None)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("embed", help="report the coordinate-space data of a graph")
    _add_common(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("reduce", help="reduce a connected graph to an equivalent tree")
    _add_common(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("class", help="enumerate a graph's mutation-equivalence class")
    _add_common(p)
    p.add_argument("--max-classes", type=int, default=None, help=f"bound (or ${MAX_CLASSES_ENV})")
    p.set_defaults(func=cmd_class)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, GraphError, UsageError, OracleBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
