"""Constructive colorings realizing the upper bounds.

Every constructor verifies its output before returning; a
:class:`BoundedColoring` with ``verified=False`` never escapes.  When a
direct construction fails verification the constructor falls back to
bounded exact search inside the claimed palette and records that in
``strategy``, so corpus statistics reveal how often the direct rules
suffice.  If even the fallback fails, :class:`BoundUnmet` is raised --
loudly, because that would be evidence against the claimed bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .analysis import (
    CdsResult,
    analyze,
    find_hamilton_cycle,
    induced_subgraph,
    is_connected,
    is_outerplanar,
    min_connected_dominating_set,
)
from .errors import BadParams, BoundUnmet, NotHamiltonian, PreconditionViolated
from .generate import cycle
from .graphs import EdgeColoring, Graph
from .solver import rc_exact, rc_upper_witness
from .verify import is_rainbow_connected

STRATEGIES = (
    "cycle",
    "hamiltonian",
    "fan_small",
    "fan_general",
    "c4_case",
    "cut_vertex",
    "cds_extension",
    "exact_fallback",
)


@dataclass(frozen=True)
class BoundedColoring:
    """A verified coloring together with the bound it realizes."""

    coloring: EdgeColoring
    bound_claimed: int
    strategy: str
    verified: bool

    def __post_init__(self) -> None:
        assert self.strategy in STRATEGIES
        assert self.coloring.palette_size <= self.bound_claimed


def _verified(g: Graph, colors: list[int]) -> EdgeColoring | None:
    coloring = EdgeColoring(tuple(colors))
    if is_rainbow_connected(g, coloring).connected:
        return coloring
    return None


def _cycle_order_colors(n: int) -> list[int]:
    half = math.ceil(n / 2)
    return [j % half for j in range(n)]


def color_cycle(n: int) -> BoundedColoring:
    """Coloring of the standard cycle on n vertices with ceil(n/2) colors.

    Edge j (which follows the cyclic order in the standard cycle) gets
    color j mod ceil(n/2); any two vertices are joined by an arc of at
    most ceil(n/2) edges whose indices are consecutive, so the coloring
    verifies.
    """
    if n < 3:
        raise BadParams(f"cycle needs n >= 3, got {n}")
    g = cycle(n)
    colors = _cycle_order_colors(n)
    coloring = _verified(g, colors)
    if coloring is None:
        raise BoundUnmet(f"cycle coloring of C_{n} failed verification")
    return BoundedColoring(coloring, math.ceil(n / 2), "cycle", True)


def color_cycle_graph(g: Graph) -> BoundedColoring:
    """Same rule for any graph that is a cycle (arbitrary vertex ids)."""
    if g.n < 3 or any(d != 2 for d in g.degrees) or not is_connected(g):
        raise PreconditionViolated("graph is not a cycle")
    order = [0]
    prev = -1
    while len(order) < g.n:
        nxt = [w for w in g.neighbors(order[-1]) if w != prev]
        prev = order[-1]
        order.append(nxt[0])
    half = math.ceil(g.n / 2)
    colors = [0] * g.m
    for j in range(g.n):
        u, v = order[j], order[(j + 1) % g.n]
        colors[g.edge_index[(min(u, v), max(u, v))]] = j % half
    coloring = _verified(g, colors)
    if coloring is None:
        raise BoundUnmet("cycle coloring failed verification")
    return BoundedColoring(coloring, half, "cycle", True)


def color_hamiltonian(g: Graph) -> BoundedColoring:
    """Hamilton-cycle edges colored like a cycle, all chords color 0."""
    if g.n < 3 or not is_connected(g):
        raise NotHamiltonian("need a connected graph on >= 3 vertices")
    ham = find_hamilton_cycle(g)
    if ham is None:
        raise NotHamiltonian("no Hamilton cycle found by exhaustive search")
    half = math.ceil(g.n / 2)
    colors = [0] * g.m
    for j in range(g.n):
        u, v = ham[j], ham[(j + 1) % g.n]
        colors[g.edge_index[(min(u, v), max(u, v))]] = j % half
    coloring = _verified(g, colors)
    if coloring is None:
        raise BoundUnmet("Hamiltonian coloring failed verification")
    return BoundedColoring(coloring, half, "hamiltonian", True)


def _compact_fresh(colors: list[int], inner_palette: int) -> list[int]:
    # Keep inner ids fixed; renumber the used fresh ids densely above them.
    used = sorted({c for c in colors if c >= inner_palette})
    remap = {c: inner_palette + i for i, c in enumerate(used)}
    return [remap.get(c, c) for c in colors]


def _map_inner_colors(g: Graph, d: CdsResult, inner: EdgeColoring) -> dict[int, int]:
    """Colors of g-edges inside the dominating set, via the relabeling."""
    sub = d.induced_subgraph
    if len(inner) != sub.m:
        raise ValueError("inner coloring does not fit the induced subgraph")
    out = {}
    for j, (a, b) in enumerate(g.edges):
        if a in d.vertex_map and b in d.vertex_map:
            x, y = d.vertex_map[a], d.vertex_map[b]
            out[j] = inner.colors[sub.edge_index[(min(x, y), max(x, y))]]
    return out


def cds_extension_coloring(
    g: Graph,
    d: CdsResult,
    inner: EdgeColoring,
    search_limit: int = 3**12,
) -> BoundedColoring:
    """Extend a coloring of the dominated core by three fresh colors.

    Edges inside the core keep ``inner``.  Default rule: each outside
    vertex gets color a on its first core-incident edge and b on a
    second one if present; everything else still uncolored gets c.  If
    that fails verification, a variant alternates a/b over the outside
    vertices that have only one core edge.  If that fails too, all
    {a,b,c} assignments to non-core edges are searched exhaustively
    (within ``search_limit``), then a full bounded search over the whole
    inner+3 palette.  Only after all of that is BoundUnmet raised.
    """
    if g.n >= 1 and min(g.degrees) < 2 and set(d.set) != set(range(g.n)):
        raise PreconditionViolated("extension rule needs minimum degree >= 2")
    dset = set(d.set)
    if not dset or any(
        v not in dset and not (set(g.neighbors(v)) & dset) for v in range(g.n)
    ):
        raise PreconditionViolated("not a dominating set")
    inner_palette = inner.palette_size
    bound = inner_palette + 3
    inner_by_edge = _map_inner_colors(g, d, inner)
    outside_edges = [j for j in range(g.m) if j not in inner_by_edge]

    if not outside_edges:
        coloring = _verified(g, [inner_by_edge[j] for j in range(g.m)])
        if coloring is None:
            raise BoundUnmet("core coloring does not verify on its own graph")
        return BoundedColoring(coloring, bound, "cds_extension", True)

    a, b, c = inner_palette, inner_palette + 1, inner_palette + 2

    def assemble(assignment: dict[int, int]) -> list[int]:
        return [
            inner_by_edge[j] if j in inner_by_edge else assignment.get(j, c)
            for j in range(g.m)
        ]

    # Default rule.
    assign: dict[int, int] = {}
    for v in range(g.n):
        if v in dset:
            continue
        core_edges = sorted(
            j for w, j in g.adjacency[v] if w in dset and j not in inner_by_edge
        )
        if core_edges and core_edges[0] not in assign:
            assign[core_edges[0]] = a
        for j in core_edges[1:2]:
            if j not in assign:
                assign[j] = b
    coloring = _verified(g, _compact_fresh(assemble(assign), inner_palette))
    if coloring is not None:
        return BoundedColoring(coloring, bound, "cds_extension", True)

    # Alternating variant: single-core-edge vertices take a and b in turns.
    assign = {}
    parity = 0
    for v in range(g.n):
        if v in dset:
            continue
        core_edges = sorted(
            j for w, j in g.adjacency[v] if w in dset and j not in inner_by_edge
        )
        if not core_edges:
            continue
        if len(core_edges) == 1:
            if core_edges[0] not in assign:
                assign[core_edges[0]] = (a, b)[parity]
                parity ^= 1
        else:
            if core_edges[0] not in assign:
                assign[core_edges[0]] = a
            if core_edges[1] not in assign:
                assign[core_edges[1]] = b
    coloring = _verified(g, _compact_fresh(assemble(assign), inner_palette))
    if coloring is not None:
        return BoundedColoring(coloring, bound, "cds_extension", True)

    # Exhaustive {a,b,c} assignments to the outside edges.
    if 3 ** len(outside_edges) <= search_limit:
        for combo in product((a, b, c), repeat=len(outside_edges)):
            assign = dict(zip(outside_edges, combo))
            coloring = _verified(g, _compact_fresh(assemble(assign), inner_palette))
            if coloring is not None:
                return BoundedColoring(coloring, bound, "cds_extension", True)

    # Complete search over the whole palette budget (may recolor the core).
    witness = rc_upper_witness(g, bound, edge_limit=max(g.m, 1))
    if witness is not None:
        return BoundedColoring(witness, bound, "exact_fallback", True)
    raise BoundUnmet(
        f"no rainbow coloring with at most {bound} colors exists for this graph"
    )


def _recognize_fan(g: Graph) -> tuple[int, list[int]] | None:
    """A fan is one vertex adjacent to all others whose removal leaves an
    induced path; returns (hub, rim path order from its smaller end)."""
    hubs = [v for v in range(g.n) if g.degrees[v] == g.n - 1]
    if not hubs:
        return None
    hub = hubs[0]
    rest = tuple(v for v in range(g.n) if v != hub)
    sub, relabel = induced_subgraph(g, rest)
    if sub.m != sub.n - 1 or not is_connected(sub) or any(d > 2 for d in sub.degrees):
        return None
    back = {i: v for v, i in relabel.items()}
    if sub.n == 1:
        return hub, [back[0]]
    ends = sorted(i for i in range(sub.n) if sub.degrees[i] == 1)
    order = [ends[0] if back[ends[0]] < back[ends[1]] else ends[1]]
    prev = -1
    while len(order) < sub.n:
        nxt = [w for w in sub.neighbors(order[-1]) if w != prev]
        prev = order[-1]
        order.append(nxt[0])
    return hub, [back[i] for i in order]


def _fan_colors(g: Graph, hub: int, rim: list[int], small: bool) -> list[int]:
    colors = [0] * g.m

    def eid(u: int, v: int) -> int:
        return g.edge_index[(min(u, v), max(u, v))]

    for i, q in enumerate(rim):
        colors[eid(hub, q)] = i % 2
    for i in range(len(rim) - 1):
        colors[eid(rim[i], rim[i + 1])] = i % 2 if small else 2
    return colors


def color_outerplanar_diam2(g: Graph) -> BoundedColoring:
    """At most 3 colors for a bridgeless outerplanar graph of diameter 2.

    Dispatch mirrors the structure of such graphs: a cut vertex
    dominates everything (cut_vertex); a chordless graph is a short
    cycle (cycle); a fan takes the explicit two- or three-coloring
    (fan_small / fan_general); the remaining shapes are tiny and get a
    direct 2-color search (c4_case).  Verification guards every branch,
    with rc_upper_witness(g, 3) as the recorded fallback.
    """
    report = analyze(g)
    if report.bridges or report.diameter != 2 or not is_outerplanar(g):
        raise PreconditionViolated(
            "need a bridgeless outerplanar graph of diameter 2"
        )

    if report.cut_vertices:
        v = min(report.cut_vertices)
        if all(u == v or g.has_edge(u, v) for u in range(g.n)):
            sub, relabel = induced_subgraph(g, (v,))
            d = CdsResult((v,), sub, 1, relabel)
            try:
                res = cds_extension_coloring(g, d, EdgeColoring(()))
                strategy = "cut_vertex" if res.strategy == "cds_extension" else res.strategy
                return BoundedColoring(res.coloring, 3, strategy, True)
            except BoundUnmet:
                pass
        return _fallback(g, 3)

    if all(deg == 2 for deg in g.degrees):
        res = color_cycle_graph(g)
        return BoundedColoring(res.coloring, 3, "cycle", True)

    fan = _recognize_fan(g)
    if fan is not None and g.n >= 5:
        hub, rim = fan
        small = g.n == 5
        for orientation in (rim, rim[::-1]):
            coloring = _verified(g, _fan_colors(g, hub, orientation, small))
            if coloring is not None:
                return BoundedColoring(
                    coloring, 3, "fan_small" if small else "fan_general", True
                )
        return _fallback(g, 3)

    two = rc_upper_witness(g, 2, edge_limit=max(g.m, 1))
    if two is not None:
        return BoundedColoring(two, 3, "c4_case", True)
    return _fallback(g, 3)


def _fallback(g: Graph, bound: int) -> BoundedColoring:
    witness = rc_upper_witness(g, bound, edge_limit=max(g.m, 1))
    if witness is None:
        raise BoundUnmet(
            f"no rainbow coloring with at most {bound} colors exists for this graph"
        )
    return BoundedColoring(witness, bound, "exact_fallback", True)


def color_outerplanar_diam3(g: Graph) -> BoundedColoring:
    """At most 6 colors for a bridgeless outerplanar graph of diameter 3.

    Chordless graphs are cycles of length 6 or 7 (cycle strategy); the
    rest take a minimum connected dominating set of size at most 4,
    whose induced subgraph is colored optimally and extended by three
    fresh colors.  A missing small dominating set (NoneWithinCap) is
    propagated, never guessed around.
    """
    report = analyze(g)
    if report.bridges or report.diameter != 3 or not is_outerplanar(g):
        raise PreconditionViolated(
            "need a bridgeless outerplanar graph of diameter 3"
        )

    if all(deg == 2 for deg in g.degrees):
        res = color_cycle_graph(g)
        return BoundedColoring(res.coloring, 6, "cycle", True)

    d = min_connected_dominating_set(g, size_cap=4)
    inner = rc_exact(d.induced_subgraph, edge_limit=max(d.induced_subgraph.m, 1))
    assert inner.value <= 3
    try:
        res = cds_extension_coloring(g, d, inner.coloring)
        return BoundedColoring(res.coloring, 6, res.strategy, True)
    except BoundUnmet:
        return _fallback(g, 6)
