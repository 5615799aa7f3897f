"""Command-line surface.

Subcommands: verify, solve, reduce, color, gen, corpus.  Exit codes are
stable contracts: 0 success (or true verdict), 1 false verdict, 2 input
or precondition error, 3 bound violation.  ``--format records`` emits
line-oriented ``key=value`` pairs for scripting; identical invocations
with the same seed produce byte-identical output.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import construct, corpus, generate, io, reductions, solver
from .errors import BoundUnmet, GraphError
from .verify import is_rainbow_connected, is_rainbow_vertex_connected

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_BOUND = 3


class _Records:
    def __init__(self, fmt: str):
        self.records = fmt == "records"

    def emit(self, **kv) -> None:
        if self.records:
            for k, v in kv.items():
                print(f"{k}={v}")
        else:
            print("  ".join(f"{k}={v}" for k, v in kv.items()))


def _read(path: str) -> str:
    return Path(path).read_text(encoding="ascii")


def _write(path: str | None, content: str) -> None:
    if path:
        Path(path).write_text(content, encoding="ascii")
    else:
        sys.stdout.write(content)


def cmd_verify(args) -> int:
    out = _Records(args.format)
    text = _read(args.file)
    if args.mode == "edge":
        g, coloring = io.parse_colored_graph(text)
        verdict = is_rainbow_connected(g, coloring, palette_bound=args.palette_bound)
    else:
        g, coloring = io.parse_vertex_colored_graph(text)
        verdict = is_rainbow_vertex_connected(g, coloring, palette_bound=args.palette_bound)
    if verdict.connected:
        out.emit(verdict="true")
        return EXIT_OK
    u, v = verdict.counterexample
    out.emit(verdict="false", counterexample=f"{u} {v}")
    return EXIT_FALSE


def cmd_solve(args) -> int:
    out = _Records(args.format)
    g = io.parse_graph(_read(args.file))
    if args.mode == "rc":
        res = solver.rc_exact(g, k_cap=args.cap, edge_limit=args.limit or solver.DEFAULT_EDGE_LIMIT)
        coloring_text = io.serialize_colored_graph(g, res.coloring)
    else:
        res = solver.rvc_exact(g, k_cap=args.cap, vertex_limit=args.limit or solver.DEFAULT_VERTEX_LIMIT)
        coloring_text = io.serialize_vertex_colored_graph(g, res.coloring)
    out.emit(value=res.value, nodes_explored=res.nodes_explored, elapsed=f"{res.elapsed:.4f}")
    if args.out:
        _write(args.out, coloring_text)
    return EXIT_OK


def _provenance_text(red: reductions.ReductionOutput) -> str:
    lines = []
    for vid in sorted(red.vertex_provenance):
        lines.append(f"v{vid} <- {red.vertex_provenance[vid]}")
    for eid in sorted(red.edge_provenance):
        lines.append(f"e{eid} <- {red.edge_provenance[eid]}")
    return "\n".join(lines) + "\n"


def cmd_reduce(args) -> int:
    out = _Records(args.format)
    text = _read(args.file)
    if args.kind in ("planarize", "planar-bipartite"):
        g, drawing, coloring = io.parse_drawing(text)
        if coloring is None:
            raise GraphError("planarize input must carry edge colors")
        split = reductions.split_multicrossed_edges(g, coloring, drawing)
        red = reductions.planarize(split.graph, split.edge_coloring, split.drawing)
        gadgets = len(red.gadgets)
        fresh = split.fresh_color_count + red.fresh_color_count
        if args.kind == "planar-bipartite":
            red = reductions.bipartize_subdivision(red.graph, red.edge_coloring)
            fresh += red.fresh_color_count
        result_text = io.serialize_colored_graph(red.graph, red.edge_coloring)
    elif args.kind == "bipartize":
        g, coloring = io.parse_colored_graph(text)
        red = reductions.bipartize_subdivision(g, coloring)
        gadgets, fresh = 0, red.fresh_color_count
        result_text = io.serialize_colored_graph(red.graph, red.edge_coloring)
    elif args.kind == "linegraph":
        g, coloring = io.parse_colored_graph(text)
        red = reductions.to_line_rvc(g, coloring)
        gadgets, fresh = 0, red.fresh_color_count
        result_text = io.serialize_vertex_colored_graph(red.graph, red.vertex_coloring)
    else:  # pragma: no cover - argparse restricts choices
        raise GraphError(f"unknown reduction {args.kind}")
    cin = red.edge_coloring or red.vertex_coloring
    out.emit(
        n=red.graph.n,
        m=red.graph.m,
        palette=cin.palette_size,
        n_delta=red.graph.n - g.n,
        m_delta=red.graph.m - g.m,
        palette_delta=cin.palette_size - coloring.palette_size,
        fresh_colors=fresh,
        gadgets=gadgets,
    )
    _write(args.out, result_text)
    if args.provenance:
        _write(args.provenance, _provenance_text(red))
    return EXIT_OK


def cmd_color(args) -> int:
    out = _Records(args.format)
    g = io.parse_graph(_read(args.file))
    if args.strategy == "cycle":
        bc = construct.color_cycle_graph(g)
    elif args.strategy == "hamiltonian":
        bc = construct.color_hamiltonian(g)
    elif args.strategy == "outerplanar2":
        bc = construct.color_outerplanar_diam2(g)
    else:
        bc = construct.color_outerplanar_diam3(g)
    out.emit(
        strategy=bc.strategy,
        palette=bc.coloring.palette_size,
        bound=bc.bound_claimed,
        verified=str(bc.verified).lower(),
    )
    if args.out:
        _write(args.out, io.serialize_colored_graph(g, bc.coloring))
    return EXIT_OK


def cmd_gen(args) -> int:
    g = generate.generate(args.family, n=args.n, m=args.m, seed=args.seed)
    if args.convex:
        d = generate.convex_drawing(g)
        text = io.serialize_drawing(g, d)
    else:
        text = io.serialize_graph(g)
    _write(args.out, text)
    return EXIT_OK


def cmd_corpus(args) -> int:
    out_dir = Path(args.out) if args.out else None
    for name in args.check:
        kw = {}
        if name == "planarize_equiv" and args.adversarial:
            kw["adversarial"] = args.adversarial
        result = corpus.run_check(name, args.count, args.seed, out_dir, **kw)
        print(result.summary())
        for note in result.failures:
            if note:
                print(f"counterexample={note}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rainbowcx",
        description="Rainbow connectivity: verification, exact solving, "
        "reductions and constructive colorings.",
    )
    p.add_argument("--format", choices=("text", "records"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check a colored graph file")
    v.add_argument("file")
    v.add_argument("--mode", choices=("edge", "vertex"), default="edge")
    v.add_argument("--palette-bound", type=int, default=24)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve", help="exact rc/rvc of a graph file")
    s.add_argument("file")
    s.add_argument("--mode", choices=("rc", "rvc"), default="rc")
    s.add_argument("--cap", type=int, default=None)
    s.add_argument("--limit", type=int, default=None, help="desk-scale size limit override")
    s.add_argument("--out", default=None, help="write the optimal coloring here")
    s.set_defaults(func=cmd_solve)

    r = sub.add_parser("reduce", help="apply a transformation")
    r.add_argument("kind", choices=("planarize", "bipartize", "linegraph", "planar-bipartite"))
    r.add_argument("file")
    r.add_argument("--out", default=None)
    r.add_argument("--provenance", default=None)
    r.set_defaults(func=cmd_reduce)

    c = sub.add_parser("color", help="constructive bounded coloring")
    c.add_argument("strategy", choices=("cycle", "hamiltonian", "outerplanar2", "outerplanar3"))
    c.add_argument("file")
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_color)

    g = sub.add_parser("gen", help="generate a family instance")
    g.add_argument("family", choices=generate.FAMILIES)
    g.add_argument("--n", type=int, default=0)
    g.add_argument("--m", type=int, default=None)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--convex", action="store_true", help="attach a convex drawing")
    g.add_argument("--out", default=None)
    g.set_defaults(func=cmd_gen)

    co = sub.add_parser("corpus", help="run randomized property checks")
    co.add_argument("--check", action="append", required=True, choices=sorted(corpus.CHECKS))
    co.add_argument("--count", type=int, default=100)
    co.add_argument("--seed", type=int, default=0)
    co.add_argument(
        "--adversarial", type=int, default=0,
        help="forced double-traversal instances (planarize_equiv only)",
    )
    co.add_argument("--out", default=None, help="directory for counterexample dumps")
    co.set_defaults(func=cmd_corpus)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BoundUnmet as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
