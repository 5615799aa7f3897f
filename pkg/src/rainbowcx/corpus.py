"""Randomized corpora and property-check runners.

Each check draws a deterministic instance stream from a seed, evaluates
one property (reduction equivalence, bound realization, oracle
agreement), and reports pass/fail counts.  Failing instances are data:
they are dumped as self-contained files re-runnable by the CLI, never
swallowed.  The oracles here are deliberately naive (simple-path
enumeration, unrestricted coloring enumeration) so they stay
independent of the bitmask search and the canonical-form solver they
cross-check.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path

from .analysis import diameter, find_hamilton_cycle, is_connected, min_connected_dominating_set
from .construct import cds_extension_coloring, color_hamiltonian, color_outerplanar_diam2, color_outerplanar_diam3
from .errors import DegenerateDrawing, GraphError
from .generate import (
    fan,
    permuted_convex_drawing,
    random_bridgeless,
    random_connected,
    random_outerplanar,
)
from .graphs import (
    Drawing,
    EdgeColoring,
    Graph,
    VertexColoring,
    build_graph,
    dense_colors,
    vertex_pairs,
)
from .io import serialize_colored_graph, serialize_drawing
from .reductions import (
    bipartize_subdivision,
    detect_crossings,
    planarize,
    split_multicrossed_edges,
    to_line_rvc,
)
from .solver import rc_exact
from .verify import is_rainbow_connected, is_rainbow_vertex_connected


@dataclass
class CheckResult:
    name: str
    total: int = 0
    passes: int = 0
    failures: list[str] = field(default_factory=list)
    tally: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures and self.passes == self.total

    def record(self, ok: bool, note: str) -> None:
        self.total += 1
        if ok:
            self.passes += 1
        else:
            self.failures.append(note)

    def count(self, key: str) -> None:
        self.tally[key] = self.tally.get(key, 0) + 1

    def summary(self) -> str:
        state = "pass" if self.ok else "FAIL"
        extra = "".join(f" {k}={v}" for k, v in sorted(self.tally.items()))
        return (
            f"check={self.name} total={self.total} pass={self.passes} "
            f"fail={len(self.failures)} result={state}{extra}"
        )


# --- independent oracles ---------------------------------------------------

def oracle_edge_verdict(g: Graph, coloring: EdgeColoring) -> tuple[bool, tuple[int, int] | None]:
    """Simple-path enumeration: for each pair, DFS over simple paths with
    pairwise-distinct edge colors (every rainbow path survives the
    prefix filter).  Returns the lexicographically first failing pair."""

    def pair_ok(u: int, v: int) -> bool:
        stack = [(u, {u}, 0)]
        while stack:
            x, seen, mask = stack.pop()
            for w, j in g.adjacency[x]:
                bit = 1 << coloring.colors[j]
                if mask & bit or w in seen:
                    continue
                if w == v:
                    return True
                stack.append((w, seen | {w}, mask | bit))
        return False

    for u, v in vertex_pairs(g.n):
        if not pair_ok(u, v):
            return False, (u, v)
    return True, None


def oracle_vertex_verdict(g: Graph, coloring: VertexColoring) -> tuple[bool, tuple[int, int] | None]:
    """Simple-path enumeration for the vertex variant: internal vertices
    must carry pairwise distinct colors; endpoints are unconstrained."""

    def pair_ok(u: int, v: int) -> bool:
        stack = [(u, {u}, frozenset())]
        while stack:
            x, seen, used = stack.pop()
            for w, _ in g.adjacency[x]:
                if w in seen:
                    continue
                if w == v:
                    return True
                cw = coloring.colors[w]
                if cw in used:
                    continue
                stack.append((w, seen | {w}, used | {cw}))
        return False

    for u, v in vertex_pairs(g.n):
        if not pair_ok(u, v):
            return False, (u, v)
    return True, None


def oracle_rc_unrestricted(g: Graph, cap: int | None = None) -> int:
    """rc by unrestricted enumeration over all k^m colorings, ascending k.

    No canonical-form shortcut: this is the ground truth the solver's
    symmetry breaking is validated against (m <= 9 instances only).
    """
    assert is_connected(g)
    if g.m == 0:
        return 0
    cap = g.m if cap is None else cap
    for k in range(1, cap + 1):
        for combo in product(range(k), repeat=g.m):
            if len(set(combo)) != k:
                continue
            if is_rainbow_connected(g, EdgeColoring(dense_colors(combo))).connected:
                return k
    raise AssertionError("unrestricted enumeration found no coloring")


def oracle_rvc_unrestricted(g: Graph, cap: int | None = None) -> int:
    """rvc by unrestricted enumeration over all k^n vertex colorings."""
    assert is_connected(g)
    if all(g.has_edge(u, v) for u, v in vertex_pairs(g.n)):
        return 0
    cap = g.n if cap is None else cap
    for k in range(1, cap + 1):
        for combo in product(range(k), repeat=g.n):
            if len(set(combo)) != k:
                continue
            verdict = is_rainbow_vertex_connected(g, VertexColoring(dense_colors(combo)))
            if verdict.connected:
                return k
    raise AssertionError("unrestricted enumeration found no coloring")


# --- instance streams ------------------------------------------------------

def _random_dense(rng: random.Random, length: int, palette: int) -> tuple[int, ...]:
    # Uniform colors with density forced on `palette` distinct positions.
    palette = min(palette, length)
    colors = [rng.randrange(palette) for _ in range(length)]
    for c, i in enumerate(rng.sample(range(length), palette)):
        colors[i] = c
    return tuple(colors)


def random_coloring(rng: random.Random, m: int, palette: int) -> EdgeColoring:
    if m == 0:
        return EdgeColoring(())
    return EdgeColoring(_random_dense(rng, m, palette))


def random_vertex_coloring(rng: random.Random, n: int, palette: int) -> VertexColoring:
    return VertexColoring(_random_dense(rng, n, palette))


def colored_instances(count: int, seed: int, n_max: int = 7, palette_max: int = 4):
    """Random connected edge-colored graphs, n <= n_max."""
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(2, n_max)
        max_m = n * (n - 1) // 2
        m = rng.randint(n - 1, max_m)
        g = random_connected(n, m, seed=rng.randrange(1 << 30))
        yield g, random_coloring(rng, g.m, rng.randint(1, palette_max))


def glued_fan(block_sizes: list[int]) -> Graph:
    """Hub vertex 0 joined to disjoint rim paths (each of >= 2 vertices):
    bridgeless, outerplanar, diameter 2, hub is a cut vertex when there
    are two or more blocks."""
    edges = []
    nxt = 1
    for size in block_sizes:
        block = list(range(nxt, nxt + size))
        nxt += size
        edges.extend((0, v) for v in block)
        edges.extend((block[i], block[i + 1]) for i in range(size - 1))
    return build_graph(nxt, edges)


def glued_cycles(lengths: list[int]) -> Graph:
    """Cycles sharing the single vertex 0: bridgeless and outerplanar,
    with 0 a cut vertex when there are two or more cycles."""
    edges = []
    nxt = 1
    for length in lengths:
        ring = [0] + list(range(nxt, nxt + length - 1))
        nxt += length - 1
        edges.extend((ring[i], ring[(i + 1) % length]) for i in range(length))
    return build_graph(nxt, edges)


def bridgeless_outerplanar_diam(
    target_diam: int, count: int, seed: int, n_max: int = 10
):
    """Bridgeless outerplanar instances of the requested diameter.

    Mixes cycle-plus-noncrossing-chords samples with glued fans (cut
    vertex cases) and plain fans, rejection-filtered on the diameter.
    """
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        kind = rng.random()
        if target_diam == 2 and kind < 0.25:
            blocks = rng.randint(1 if rng.random() < 0.5 else 2, 3)
            sizes = [rng.randint(2, max(2, (n_max - 1) // blocks)) for _ in range(blocks)]
            g = glued_fan(sizes)
        elif target_diam == 2 and kind < 0.5:
            g = fan(rng.randint(4, n_max))
        elif target_diam == 3 and kind < 0.12:
            # one longer cycle plus some triangles through a cut vertex
            lengths = [rng.randint(4, 5)] + [3] * rng.randint(1, 2)
            rng.shuffle(lengths)
            g = glued_cycles(lengths)
        else:
            n = rng.randint(4 if target_diam == 2 else 6, n_max)
            g = random_outerplanar(
                n, seed=rng.randrange(1 << 30), chord_prob=rng.uniform(0.1, 0.9)
            )
        if g.n > n_max or diameter(g) != target_diam:
            continue
        produced += 1
        yield g


def mindeg2_connected_instances(count: int, seed: int, n_max: int = 9):
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        n = rng.randint(4, n_max)
        m = rng.randint(n, min(n + 3, n * (n - 1) // 2))
        g = random_connected(n, m, seed=rng.randrange(1 << 30))
        if min(g.degrees) < 2:
            continue
        produced += 1
        yield g


def bridgeless_diam2_instances(count: int, seed: int, n_max: int = 9):
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        n = rng.randint(5, n_max)
        lo = max(n, int(0.3 * n * (n - 1) / 2))
        hi = max(lo + 1, int(0.6 * n * (n - 1) / 2))
        m = rng.randint(lo, min(hi, n * (n - 1) // 2))
        g = random_bridgeless(n, m, seed=rng.randrange(1 << 30))
        if diameter(g) != 2:
            continue
        produced += 1
        yield g


def hamiltonian_instances(count: int, seed: int, n_max: int = 8):
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        n = rng.randint(3, n_max)
        m = rng.randint(n, min(n + 4, n * (n - 1) // 2))
        g = random_connected(n, m, seed=rng.randrange(1 << 30))
        if find_hamilton_cycle(g) is None:
            continue
        produced += 1
        yield g


def drawn_instances(count: int, seed: int, max_crossings: int = 3):
    """Drawn colored graphs whose convex drawing has 1..max_crossings
    crossings."""
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        n = rng.randint(4, 6)
        m = rng.randint(n - 1, min(n + 2, n * (n - 1) // 2))
        g = random_connected(n, m, seed=rng.randrange(1 << 30))
        d = permuted_convex_drawing(g, seed=rng.randrange(1 << 30))
        try:
            crossings = detect_crossings(g, d)
        except DegenerateDrawing:
            continue
        if not (1 <= len(crossings) <= max_crossings):
            continue
        produced += 1
        yield g, random_coloring(rng, g.m, rng.randint(2, min(4, g.m))), d


def adversarial_double_cross_instances(count: int, seed: int):
    """Path graphs with all-distinct colors drawn with crossing edges.

    In a path every pair is joined by a unique simple path, so any
    crossing between two path edges forces some rainbow path (here: all
    of them) through both edges of that crossing.  These deliberately
    probe the crossing-gadget behavior on double traversals.
    """
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        n = rng.randint(5, 7)
        g = build_graph(n, [(i, i + 1) for i in range(n - 1)])
        d = permuted_convex_drawing(g, seed=rng.randrange(1 << 30))
        try:
            crossings = detect_crossings(g, d)
        except DegenerateDrawing:
            continue
        if not (1 <= len(crossings) <= 3):
            continue
        produced += 1
        yield g, EdgeColoring(tuple(range(g.m))), d


# --- checks ----------------------------------------------------------------

def _dump(out_dir: Path | None, name: str, content: str) -> str:
    if out_dir is None:
        return f"(not dumped) {name}"
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / name
    path.write_text(content, encoding="ascii")
    return str(path)


def check_verifier_oracle(count: int, seed: int, out_dir: Path | None = None) -> CheckResult:
    """Bitmask-state verdicts equal simple-path-enumeration verdicts."""
    res = CheckResult("verifier_oracle")
    rng = random.Random(seed)
    for g, coloring in colored_instances(count, seed):
        got = is_rainbow_connected(g, coloring)
        want_ok, want_pair = oracle_edge_verdict(g, coloring)
        ok = got.connected == want_ok and (got.counterexample == want_pair)
        vc = random_vertex_coloring(rng, g.n, rng.randint(1, 4))
        gotv = is_rainbow_vertex_connected(g, vc)
        wantv_ok, wantv_pair = oracle_vertex_verdict(g, vc)
        okv = gotv.connected == wantv_ok and (gotv.counterexample == wantv_pair)
        note = ""
        if not (ok and okv):
            note = _dump(
                out_dir,
                f"verifier_oracle_{res.total}.txt",
                serialize_colored_graph(g, coloring),
            )
        res.record(ok and okv, note)
    return res


def check_bipartize_equiv(count: int, seed: int, out_dir: Path | None = None) -> CheckResult:
    res = CheckResult("bipartize_equiv")
    for g, coloring in colored_instances(count, seed, n_max=6, palette_max=3):
        if g.m == 0:
            continue
        out = bipartize_subdivision(g, coloring)
        same = (
            is_rainbow_connected(g, coloring).connected
            == is_rainbow_connected(out.graph, out.edge_coloring).connected
        )
        note = ""
        if not same:
            note = _dump(
                out_dir,
                f"bipartize_{res.total}.txt",
                serialize_colored_graph(g, coloring),
            )
        res.record(same, note)
    return res


def check_linegraph_equiv(count: int, seed: int, out_dir: Path | None = None) -> CheckResult:
    res = CheckResult("linegraph_equiv")
    for g, coloring in colored_instances(count, seed, n_max=6, palette_max=3):
        if g.m == 0 or not is_connected(g):
            continue
        out = to_line_rvc(g, coloring)
        same = (
            is_rainbow_connected(g, coloring).connected
            == is_rainbow_vertex_connected(out.graph, out.vertex_coloring).connected
        )
        note = ""
        if not same:
            note = _dump(
                out_dir,
                f"linegraph_{res.total}.txt",
                serialize_colored_graph(g, coloring),
            )
        res.record(same, note)
    return res


def _planarize_pipeline(g: Graph, coloring: EdgeColoring, d: Drawing):
    split = split_multicrossed_edges(g, coloring, d)
    return split, planarize(split.graph, split.edge_coloring, split.drawing)


def check_planarize_equiv(
    count: int,
    seed: int,
    out_dir: Path | None = None,
    adversarial: int = 0,
) -> CheckResult:
    """Verdict preservation through split + gadget replacement.

    The last ``adversarial`` instances force rainbow paths through both
    edges of a crossing; disagreements are dumped verbatim.
    """
    res = CheckResult("planarize_equiv")
    stream = list(drawn_instances(count - adversarial, seed))
    stream += list(adversarial_double_cross_instances(adversarial, seed + 1))
    for g, coloring, d in stream:
        _, out = _planarize_pipeline(g, coloring, d)
        vin = is_rainbow_connected(g, coloring).connected
        vout = is_rainbow_connected(out.graph, out.edge_coloring).connected
        note = ""
        if vin != vout:
            # the drawn instance re-runs through `reduce planarize`, the
            # two colored files through `verify`
            _dump(
                out_dir,
                f"planarize_drawn_{res.total}.txt",
                serialize_drawing(g, d, coloring),
            )
            note = _dump(
                out_dir,
                f"planarize_in_{res.total}.txt",
                serialize_colored_graph(g, coloring),
            )
            _dump(
                out_dir,
                f"planarize_out_{res.total}.txt",
                serialize_colored_graph(out.graph, out.edge_coloring),
            )
        res.record(vin == vout, note)
    return res


def check_planarize_sizes(count: int, seed: int, out_dir: Path | None = None) -> CheckResult:
    """n' = n + 9k, m' = m + 14k, palette' = palette + 5k after splitting."""
    res = CheckResult("planarize_sizes")
    stream = list(drawn_instances(count, seed))
    for g, coloring, d in stream:
        split, out = _planarize_pipeline(g, coloring, d)
        k = len(out.gadgets)
        sg = split.graph
        ok = (
            out.graph.n == sg.n + 9 * k
            and out.graph.m == sg.m + 14 * k
            and out.edge_coloring.palette_size == split.edge_coloring.palette_size + 5 * k
            and out.fresh_color_count == 5 * k
        )
        note = "" if ok else _dump(
            out_dir, f"planarize_sizes_{res.total}.txt", serialize_drawing(g, d, coloring)
        )
        res.record(ok, note)
    return res


def check_diam2_bound(count: int, seed: int, out_dir: Path | None = None) -> CheckResult:
    """Diameter-2 outerplanar: <= 3 colors, verified, exact rc in {2, 3}."""
    res = CheckResult("diam2_bound")
    for g in bridgeless_outerplanar_diam(2, count, seed):
        try:
            bc = color_outerplanar_diam2(g)
            res.count(bc.strategy)
            exact = rc_exact(g, edge_limit=max(g.m, 1)).value
            ok = bc.verified and bc.coloring.palette_size <= 3 and exact in (2, 3)
        except GraphError:
            ok = False
        note = "" if ok else _dump(
            out_dir, f"diam2_{res.total}.txt",
            serialize_colored_graph(g, EdgeColoring(tuple(0 for _ in range(g.m)))),
        )
        res.record(ok, note)
    return res


def check_diam3_bound(count: int, seed: int, out_dir: Path | None = None) -> CheckResult:
    """Diameter-3 outerplanar: <= 6 colors, verified, exact rc in 3..6."""
    res = CheckResult("diam3_bound")
    for g in bridgeless_outerplanar_diam(3, count, seed):
        try:
            bc = color_outerplanar_diam3(g)
            res.count(bc.strategy)
            exact = rc_exact(g, edge_limit=max(g.m, 1)).value
            ok = bc.verified and bc.coloring.palette_size <= 6 and 3 <= exact <= 6
        except GraphError:
            ok = False
        note = "" if ok else _dump(
            out_dir, f"diam3_{res.total}.txt",
            serialize_colored_graph(g, EdgeColoring(tuple(0 for _ in range(g.m)))),
        )
        res.record(ok, note)
    return res


def check_cds_bound(count: int, seed: int, out_dir: Path | None = None) -> CheckResult:
    """rc(g) <= rc(core) + 3 for the minimum connected dominating set,
    and the extension coloring lands within that palette."""
    res = CheckResult("cds_bound")
    for g in mindeg2_connected_instances(count, seed):
        try:
            d = min_connected_dominating_set(g, size_cap=g.n)
            inner = rc_exact(d.induced_subgraph, edge_limit=max(d.induced_subgraph.m, 1))
            whole = rc_exact(g, edge_limit=max(g.m, 1))
            ext = cds_extension_coloring(g, d, inner.coloring)
            ok = (
                whole.value <= inner.value + 3
                and ext.verified
                and ext.coloring.palette_size <= inner.value + 3
            )
        except GraphError:
            ok = False
        note = "" if ok else _dump(
            out_dir, f"cds_{res.total}.txt",
            serialize_colored_graph(g, EdgeColoring(tuple(0 for _ in range(g.m)))),
        )
        res.record(ok, note)
    return res


def check_diam2_rc5(count: int, seed: int, out_dir: Path | None = None) -> CheckResult:
    """Bridgeless diameter-2 graphs have rc <= 5."""
    res = CheckResult("diam2_rc5")
    for g in bridgeless_diam2_instances(count, seed):
        exact = rc_exact(g, edge_limit=max(g.m, 1)).value
        ok = exact <= 5
        note = "" if ok else _dump(
            out_dir, f"diam2rc5_{res.total}.txt",
            serialize_colored_graph(g, EdgeColoring(tuple(0 for _ in range(g.m)))),
        )
        res.record(ok, note)
    return res


def check_hamiltonian_bound(count: int, seed: int, out_dir: Path | None = None) -> CheckResult:
    """Hamiltonian graphs: ceil(n/2) colors suffice, constructively."""
    res = CheckResult("hamiltonian_bound")
    for g in hamiltonian_instances(count, seed):
        bound = math.ceil(g.n / 2)
        bc = color_hamiltonian(g)
        exact = rc_exact(g, edge_limit=max(g.m, 1)).value
        ok = bc.verified and bc.coloring.palette_size <= bound and exact <= bound
        note = "" if ok else _dump(
            out_dir, f"hamiltonian_{res.total}.txt",
            serialize_colored_graph(g, EdgeColoring(tuple(0 for _ in range(g.m)))),
        )
        res.record(ok, note)
    return res


def check_solver_selfcheck(count: int, seed: int, out_dir: Path | None = None) -> CheckResult:
    """Canonical-form solver equals unrestricted enumeration (m <= 9)."""
    res = CheckResult("solver_selfcheck")
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        n = rng.randint(2, 6)
        m = rng.randint(n - 1, min(9, n * (n - 1) // 2))
        g = random_connected(n, m, seed=rng.randrange(1 << 30))
        produced += 1
        fast = rc_exact(g).value
        slow = oracle_rc_unrestricted(g)
        ok = fast == slow
        note = "" if ok else _dump(
            out_dir, f"solver_{res.total}.txt",
            serialize_colored_graph(g, EdgeColoring(tuple(0 for _ in range(g.m)))),
        )
        res.record(ok, note)
    return res


CHECKS = {
    "verifier_oracle": check_verifier_oracle,
    "bipartize_equiv": check_bipartize_equiv,
    "linegraph_equiv": check_linegraph_equiv,
    "planarize_equiv": check_planarize_equiv,
    "planarize_sizes": check_planarize_sizes,
    "diam2_bound": check_diam2_bound,
    "diam3_bound": check_diam3_bound,
    "cds_bound": check_cds_bound,
    "diam2_rc5": check_diam2_rc5,
    "hamiltonian_bound": check_hamiltonian_bound,
    "solver_selfcheck": check_solver_selfcheck,
}


def run_check(name: str, count: int, seed: int, out_dir: Path | None = None, **kw) -> CheckResult:
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r} (known: {', '.join(sorted(CHECKS))})")
    return CHECKS[name](count, seed, out_dir, **kw)
