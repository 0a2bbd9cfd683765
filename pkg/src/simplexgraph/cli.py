"""Command-line front end: ``enumerate``, ``verify`` and ``export``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional, TextIO
from xml.etree import ElementTree as ET

from . import graph as gr
from .appendix import DATA_ENV, DATA_FILE, AppendixParseError, load_appendix
from .simplex import SUPPORTED_Q, expected_counts, universe
from .verifier import EXAMPLE_POINTS, SUITES, Context, RunConfig, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

STRATUM_COLORS = {
    "base": "black",
    "adjacent": "red",
    "x3_20": "orange",
    "x1_90": "gold",
    "x0_20": "green",
    "six": "blue",
}
PART_COLORS = ("red", "blue")


def _resolve_data(path: Optional[str]) -> Optional[str]:
    """``--data`` may name the file itself or the directory holding it."""
    if path is None:
        return None
    p = Path(path)
    return str(p / DATA_FILE if p.is_dir() else p)


@contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _example_base(u) -> int:
    sp = u.space
    return u.line_id(sp.span_line(sp.point_id(EXAMPLE_POINTS[0]), sp.point_id(EXAMPLE_POINTS[1])))


# enumerate


def cmd_enumerate(args) -> int:
    u = universe(args.q)
    f = u.field
    g = gr.build_graph(u)
    exp = expected_counts(args.q)
    data = {
        "q": args.q,
        "n": u.n,
        "counts": {
            "points": len(u.simplex_points),
            "lines": len(u.lines),
            "lines_per_point": sorted({len(v) for v in u.point_to_lines.values()}),
            "degree": sorted(set(g.degrees)),
            "edges": g.n_edges,
        },
        "expected": {k: exp[k] for k in ("points", "lines", "lines_per_point", "degree")},
        "points": [f.format_vector(u.rep(p)) for p in u.simplex_points],
        "lines": [u.format_line(i) for i in range(len(u.lines))],
    }
    with _output(args.output) as out:
        if args.format == "json":
            out.write(json.dumps(data, indent=2) + "\n")
        else:
            c = data["counts"]
            out.write(f"q={args.q} n={u.n}\n")
            out.write(f"simplex points: {c['points']}\n")
            out.write(f"simplex lines: {c['lines']}\n")
            out.write(f"lines per point: {', '.join(map(str, c['lines_per_point']))}\n")
            out.write(f"degree: {', '.join(map(str, c['degree']))}  edges: {c['edges']}\n")
            if args.list:
                out.write("points:\n")
                out.writelines(f"  {i}: {v}\n" for i, v in enumerate(data["points"]))
                out.write("lines:\n")
                out.writelines(f"  {i}: {v}\n" for i, v in enumerate(data["lines"]))
    return EXIT_OK


# verify


def cmd_verify(args) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    if args.q != 4:
        if args.suite not in ("all", "smallq"):
            print(f"error: suite {args.suite!r} is defined for q=4 only", file=sys.stderr)
            return EXIT_USAGE
        suites = ("smallq",)
    data = _resolve_data(args.data)
    if any(s in ("appendix", "theorem2") for s in suites):
        try:
            load_appendix(data)
        except (FileNotFoundError, AppendixParseError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
    cfg = RunConfig(suites=tuple(suites), q=args.q, appendix_path=data, threads=args.threads)
    ctx = Context(data)
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            report = run_suites(cfg, ctx, map_fn=pool.map)
    else:
        report = run_suites(cfg, ctx)
    with _output(args.output) as out:
        if args.format == "json":
            out.write(report.to_json(timings=not args.no_timing))
        else:
            out.write(report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


# export


def _node_attrs(args, u, g) -> tuple[list[dict], dict]:
    """Per-node attributes plus graph-level metadata."""
    nodes = [{"id": i, "label": u.format_line(i)} for i in range(len(u.lines))]
    meta: dict = {"q": args.q, "vertices": g.n_vertices, "edges": g.n_edges}
    if args.color_strata:
        strat = gr.stratify(g, u, args.base, strict=True)
        meta["base"] = args.base
        for name, ids in strat.classes.items():
            for i in ids:
                nodes[i]["stratum"] = name
                nodes[i]["color"] = STRATUM_COLORS[name]
        meta["strata"] = {k: len(v) for k, v in strat.classes.items()}
    if args.q == 3:
        color = gr.two_coloring(g)
        if color is not None:
            for i, c in enumerate(color):
                nodes[i]["part"] = c
                nodes[i].setdefault("color", PART_COLORS[c])
            meta["bipartite"] = [color.count(0), color.count(1)]
    return nodes, meta


def _to_dot(nodes, edges, meta) -> str:
    lines = ["graph simplex_lines {"]
    lines.append("  // " + ", ".join(f"{k}={json.dumps(v, sort_keys=True)}" for k, v in meta.items()))
    for nd in nodes:
        attrs = [f'label="{nd["label"]}"']
        for key in ("stratum", "part", "color"):
            if key in nd:
                attrs.append(f'{key}="{nd[key]}"')
        lines.append(f"  {nd['id']} [{', '.join(attrs)}];")
    lines.extend(f"  {a} -- {b};" for a, b in edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _to_graphml(nodes, edges, meta) -> str:
    root = ET.Element("graphml", xmlns="http://graphml.graphdrawing.org/xmlns")
    keys = [("label", "string"), ("stratum", "string"), ("part", "int"), ("color", "string")]
    for name, typ in keys:
        ET.SubElement(root, "key", id=name, attrib={"for": "node", "attr.name": name, "attr.type": typ})
    gel = ET.SubElement(root, "graph", id="simplex_lines", edgedefault="undirected")
    ET.SubElement(gel, "desc").text = json.dumps(meta, sort_keys=True)
    for nd in nodes:
        nel = ET.SubElement(gel, "node", id=f"n{nd['id']}")
        for name, _ in keys:
            if name in nd:
                ET.SubElement(nel, "data", key=name).text = str(nd[name])
    for k, (a, b) in enumerate(edges):
        ET.SubElement(gel, "edge", id=f"e{k}", source=f"n{a}", target=f"n{b}")
    ET.indent(root)
    return ET.tostring(root, encoding="unicode", xml_declaration=True) + "\n"


def cmd_export(args) -> int:
    u = universe(args.q)
    g = gr.build_graph(u)
    if args.color_strata:
        if args.q != 4:
            print("error: --color-strata needs q=4", file=sys.stderr)
            return EXIT_USAGE
        if args.base is None:
            args.base = _example_base(u)
    if args.base is not None and not 0 <= args.base < len(u.lines):
        print(f"error: base line id {args.base} out of range 0..{len(u.lines) - 1}", file=sys.stderr)
        return EXIT_USAGE
    nodes, meta = _node_attrs(args, u, g)
    edges = list(g.edges())
    if args.format == "dot":
        text = _to_dot(nodes, edges, meta)
    elif args.format == "graphml":
        text = _to_graphml(nodes, edges, meta)
    else:
        text = json.dumps({"meta": meta, "nodes": nodes, "edges": edges}, indent=2) + "\n"
    with _output(args.output) as out:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplexgraph",
        description="Enumerate and verify the graph of 2-dimensional q-ary simplex codes.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, choices=SUPPORTED_Q, default=4, help="field order (default 4)")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="dump simplex points, lines and counts")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--list", action="store_true", help="also list every point and line (text format)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--threads", type=int, default=1, help="worker threads for independent suites")
    p.add_argument("--data", default=os.environ.get(DATA_ENV), help=f"line-table file or directory (env {DATA_ENV})")
    p.add_argument("--no-timing", action="store_true", help="report runtime_ms as 0 for byte-identical output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", parents=[common], help="write the graph as DOT, GraphML or JSON")
    p.add_argument("--format", choices=("dot", "graphml", "json"), default="dot")
    p.add_argument("--base", type=int, help="base line id for --color-strata (default: the example line)")
    p.add_argument("--color-strata", action="store_true", help="colour vertices by stratum around the base line")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "export" and args.q not in (3, 4):
        parser.error("export supports --q 3 or --q 4")
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
