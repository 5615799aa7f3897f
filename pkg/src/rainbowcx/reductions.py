"""The three constructive transformations, with full provenance.

* :func:`planarize` replaces each crossing of a drawn edge-colored graph
  by a 3x3 grid gadget carrying a prescribed coloring with five fresh
  colors, removing the two crossed edges.
* :func:`bipartize_subdivision` subdivides every edge once, keeping the
  original color on the half at the smaller endpoint and spending one
  fresh color on the other half.
* :func:`to_line_rvc` attaches one pendant per vertex, takes the line
  graph, and turns the edge coloring into a vertex coloring with a
  single fresh color on all pendant line-vertices.

Gadget geometry.  The nine grid vertices are named by compass position::

      nw  n  ne
       w  c  e
      sw  s  se

with the crossed segments attaching at the corners: the first crossed
edge enters at ``nw`` and leaves at ``se``, the second at ``ne`` and
``sw``.  Corners are placed on the original segments inside a disc
around the crossing point whose radius is at most a quarter of the
distance to the nearest other drawing feature, so the output drawing
stays valid and provably crossing-free; the interior vertices are the
bilinear midpoints.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .analysis import is_connected, line_graph
from .errors import DegenerateDrawing, EmptyGraph, PreconditionViolated
from .geometry import (
    collinear_overlap,
    crossing_point,
    dist_sq,
    floor_sqrt_fraction_pow2,
    point_segment_dist_sq,
    scaled_int_positions,
    segments_properly_cross,
    validate_drawing,
)
from .graphs import (
    Crossing,
    Drawing,
    EdgeColoring,
    Graph,
    Point,
    VertexColoring,
)

GRID_NAMES = ("nw", "n", "ne", "w", "c", "e", "sw", "s", "se")

# Gadget edges in canonical order as (kind, kind) over the four
# attachment points (x, y enter/leave the first crossed edge; u, v the
# second) and the nine grid positions.
GADGET_EDGES: tuple[tuple[str, str], ...] = (
    ("x", "nw"),
    ("y", "se"),
    ("u", "ne"),
    ("v", "sw"),
    ("nw", "n"),
    ("n", "ne"),
    ("ne", "e"),
    ("n", "c"),
    ("nw", "w"),
    ("e", "c"),
    ("c", "w"),
    ("e", "se"),
    ("c", "s"),
    ("w", "sw"),
    ("s", "sw"),
    ("s", "se"),
)

# Color of each gadget edge: "a" = color of the first crossed edge,
# "b" = color of the second, 0..4 = the five fresh colors.
GADGET_COLORS: tuple[object, ...] = (
    "a",  # x-nw
    4,    # y-se
    4,    # u-ne
    "b",  # v-sw
    0,    # nw-n
    "a",  # n-ne
    1,    # ne-e
    1,    # n-c
    "a",  # nw-w
    2,    # e-c
    3,    # c-w
    3,    # e-se
    3,    # c-s
    "a",  # w-sw
    0,    # s-sw
    "b",  # s-se
)


@dataclass(frozen=True)
class GadgetRecord:
    """One crossing replacement: the nine fresh vertices keyed by
    compass position, the five fresh colors, the two removed edges."""

    crossing: Crossing
    grid_vertices: dict[str, int]
    fresh_colors: tuple[int, ...]
    removed_edges: tuple[int, int]


@dataclass(frozen=True)
class ReductionOutput:
    """Transformed instance plus provenance.

    ``vertex_provenance`` and ``edge_provenance`` are total over the new
    ids; origin tags are human-readable strings like ``orig:v3``,
    ``gadget:0:nw`` or ``split:e2:1``.  Exactly one of ``edge_coloring``
    and ``vertex_coloring`` is set, depending on the transformation.
    """

    graph: Graph
    edge_coloring: EdgeColoring | None
    vertex_coloring: VertexColoring | None
    vertex_provenance: dict[int, str]
    edge_provenance: dict[int, str]
    gadgets: tuple[GadgetRecord, ...]
    fresh_color_count: int
    drawing: Drawing | None = None


def detect_crossings(g: Graph, drawing: Drawing) -> list[Crossing]:
    """All interior intersection points of non-adjacent edge segments.

    Exact rational arithmetic throughout.  Degenerate drawings are
    rejected: collinear overlapping edges, or two crossings sharing one
    point (which is how three concurrent edges manifest).  Intersections
    at a vertex cannot survive drawing validation.
    """
    validate_drawing(g, drawing)
    pos = drawing.positions
    ipos = scaled_int_positions(pos)
    crossings: list[Crossing] = []
    for i, j in combinations(range(g.m), 2):
        a, b = g.edges[i]
        c, d = g.edges[j]
        if collinear_overlap(ipos[a], ipos[b], ipos[c], ipos[d]):
            raise DegenerateDrawing(f"edges {i} and {j} overlap collinearly")
        if len({a, b, c, d}) < 4:
            continue
        if segments_properly_cross(ipos[a], ipos[b], ipos[c], ipos[d]):
            pt = crossing_point(pos[a], pos[b], pos[c], pos[d])
            crossings.append(Crossing(i, j, pt))
    seen: dict[Point, Crossing] = {}
    for cr in crossings:
        if cr.point in seen:
            other = seen[cr.point]
            raise DegenerateDrawing(
                f"edges {other.edge_a}, {other.edge_b}, {cr.edge_a}, "
                f"{cr.edge_b} meet at a common point"
            )
        seen[cr.point] = cr
    crossings.sort(key=lambda cr: (cr.edge_a, cr.edge_b))
    return crossings


def _segment_param(p: Point, a: Point, b: Point) -> Fraction:
    # Position of p along a->b; p is known to be on the segment.
    rx, ry = b[0] - a[0], b[1] - a[1]
    if rx != 0:
        return (p[0] - a[0]) / rx
    return (p[1] - a[1]) / ry


def split_multicrossed_edges(
    g: Graph, coloring: EdgeColoring, drawing: Drawing
) -> ReductionOutput:
    """Insert degree-2 vertices so every edge crosses at most one other.

    Each inserted vertex sits on the original segment strictly between
    two consecutive crossing points (at their midpoint).  Splitting an
    edge k-1 times spends k-1 fresh colors: the piece at the smaller
    endpoint keeps the original color, each further piece gets its own
    fresh color.
    """
    if len(coloring) != g.m:
        raise ValueError("coloring length does not match edge count")
    crossings = detect_crossings(g, drawing)
    per_edge: dict[int, list[Point]] = {}
    for cr in crossings:
        per_edge.setdefault(cr.edge_a, []).append(cr.point)
        per_edge.setdefault(cr.edge_b, []).append(cr.point)

    positions = list(drawing.positions)
    vertex_prov = {v: f"orig:v{v}" for v in range(g.n)}
    edge_prov: dict[int, str] = {}
    new_edges: list[tuple[int, int]] = []
    new_colors: list[int] = []
    fresh = coloring.palette_size
    fresh_used = 0
    for j, (a, b) in enumerate(g.edges):
        pts = per_edge.get(j, [])
        if len(pts) <= 1:
            edge_prov[len(new_edges)] = f"orig:e{j}"
            new_edges.append((a, b))
            new_colors.append(coloring.colors[j])
            continue
        pts.sort(key=lambda p: _segment_param(p, positions[a], positions[b]))
        chain = [a]
        for p, q in zip(pts, pts[1:]):
            mid = ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)
            vid = len(positions)
            positions.append(mid)
            vertex_prov[vid] = f"split:e{j}:{len(chain) - 1}"
            chain.append(vid)
        chain.append(b)
        for piece, (u, w) in enumerate(zip(chain, chain[1:])):
            edge_prov[len(new_edges)] = f"split:e{j}:{piece}"
            new_edges.append((u, w))
            if piece == 0:
                new_colors.append(coloring.colors[j])
            else:
                new_colors.append(fresh + fresh_used)
                fresh_used += 1

    out_graph = Graph(len(positions), tuple(new_edges))
    out_drawing = Drawing(tuple(positions))
    out_coloring = EdgeColoring(tuple(new_colors))
    validate_drawing(out_graph, out_drawing)
    return ReductionOutput(
        graph=out_graph,
        edge_coloring=out_coloring,
        vertex_coloring=None,
        vertex_provenance=vertex_prov,
        edge_provenance=edge_prov,
        gadgets=(),
        fresh_color_count=fresh_used,
        drawing=out_drawing,
    )


def _gadget_positions(
    g: Graph, drawing: Drawing, crossings: list[Crossing], cr: Crossing
) -> tuple[dict[str, Point], int, int, int, int]:
    """Corner/interior positions for one gadget, and the attachment
    vertices (x, y, u, v) with u chosen on the positive side of x->y so
    the corner cycle nw, ne, se, sw winds consistently."""
    pos = drawing.positions
    x, y = g.edges[cr.edge_a]
    p, q = g.edges[cr.edge_b]
    X = cr.point
    # Orientation of q relative to the directed segment x -> y.
    side = (pos[y][0] - pos[x][0]) * (pos[q][1] - pos[x][1]) - (
        pos[y][1] - pos[x][1]
    ) * (pos[q][0] - pos[x][0])
    u, v = (q, p) if side > 0 else (p, q)

    # Safe radius: a quarter of the distance to the nearest feature.
    min_sq = None
    for w in range(g.n):
        d = dist_sq(X, pos[w])
        min_sq = d if min_sq is None else min(min_sq, d)
    for other in crossings:
        if other is cr:
            continue
        d = dist_sq(X, other.point)
        min_sq = d if min_sq is None else min(min_sq, d)
    for j, (a, b) in enumerate(g.edges):
        if j in (cr.edge_a, cr.edge_b):
            continue
        d = point_segment_dist_sq(X, pos[a], pos[b])
        min_sq = d if min_sq is None else min(min_sq, d)
    assert min_sq is not None and min_sq > 0
    corner_sq = max(
        dist_sq(X, pos[x]), dist_sq(X, pos[y]), dist_sq(X, pos[u]), dist_sq(X, pos[v])
    )
    eps = floor_sqrt_fraction_pow2(min_sq / (16 * corner_sq))

    def towards(w: int) -> Point:
        return (X[0] + eps * (pos[w][0] - X[0]), X[1] + eps * (pos[w][1] - X[1]))

    nw, ne, se, sw = towards(x), towards(u), towards(y), towards(v)

    def mid(pa: Point, pb: Point) -> Point:
        return ((pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2)

    pts = {
        "nw": nw,
        "ne": ne,
        "se": se,
        "sw": sw,
        "n": mid(nw, ne),
        "w": mid(nw, sw),
        "e": mid(ne, se),
        "s": mid(sw, se),
        "c": (
            (nw[0] + ne[0] + se[0] + sw[0]) / 4,
            (nw[1] + ne[1] + se[1] + sw[1]) / 4,
        ),
    }
    return pts, x, y, u, v


def planarize(g: Graph, coloring: EdgeColoring, drawing: Drawing) -> ReductionOutput:
    """Replace every crossing by the colored 3x3 grid gadget.

    Requires every edge to cross at most one other (run
    :func:`split_multicrossed_edges` first).  Both crossed edges of each
    crossing are removed; the sixteen gadget edges and five fresh colors
    are added per the fixed table, surviving edges keep their colors.
    Per crossing the output grows by 9 vertices and 14 edges net.  The
    induced drawing is produced alongside and sanity-checked to be
    crossing-free.
    """
    if len(coloring) != g.m:
        raise ValueError("coloring length does not match edge count")
    crossings = detect_crossings(g, drawing)
    edge_hits: dict[int, int] = {}
    for cr in crossings:
        for e in (cr.edge_a, cr.edge_b):
            edge_hits[e] = edge_hits.get(e, 0) + 1
    multi = sorted(e for e, k in edge_hits.items() if k > 1)
    if multi:
        raise PreconditionViolated(
            f"edges {multi} cross more than once; split them first"
        )

    removed = {e for cr in crossings for e in (cr.edge_a, cr.edge_b)}
    positions = list(drawing.positions)
    vertex_prov = {v: f"orig:v{v}" for v in range(g.n)}
    edge_prov: dict[int, str] = {}
    new_edges: list[tuple[int, int]] = []
    new_colors: list[int] = []
    for j, (a, b) in enumerate(g.edges):
        if j in removed:
            continue
        edge_prov[len(new_edges)] = f"orig:e{j}"
        new_edges.append((a, b))
        new_colors.append(coloring.colors[j])

    gadgets: list[GadgetRecord] = []
    palette = coloring.palette_size
    for i, cr in enumerate(crossings):
        pts, x, y, u, v = _gadget_positions(g, drawing, crossings, cr)
        base = g.n + 9 * i
        grid = {name: base + idx for idx, name in enumerate(GRID_NAMES)}
        for name in GRID_NAMES:
            vertex_prov[grid[name]] = f"gadget:{i}:{name}"
            positions.append(pts[name])
        fresh = tuple(palette + 5 * i + t for t in range(5))
        attach = {"x": x, "y": y, "u": u, "v": v}
        color_a = coloring.colors[cr.edge_a]
        color_b = coloring.colors[cr.edge_b]
        for (ea, eb), tag in zip(GADGET_EDGES, GADGET_COLORS):
            va = attach[ea] if ea in attach else grid[ea]
            vb = attach[eb] if eb in attach else grid[eb]
            edge_prov[len(new_edges)] = f"gadget:{i}:{ea}-{eb}"
            new_edges.append((va, vb))
            if tag == "a":
                new_colors.append(color_a)
            elif tag == "b":
                new_colors.append(color_b)
            else:
                new_colors.append(fresh[tag])
        gadgets.append(
            GadgetRecord(
                crossing=cr,
                grid_vertices=grid,
                fresh_colors=fresh,
                removed_edges=(cr.edge_a, cr.edge_b),
            )
        )

    out_graph = Graph(len(positions), tuple(new_edges))
    out_coloring = EdgeColoring(tuple(new_colors))
    out_drawing = Drawing(tuple(positions))
    validate_drawing(out_graph, out_drawing)
    leftover = detect_crossings(out_graph, out_drawing)
    assert not leftover, f"gadget placement left {len(leftover)} crossings"
    return ReductionOutput(
        graph=out_graph,
        edge_coloring=out_coloring,
        vertex_coloring=None,
        vertex_provenance=vertex_prov,
        edge_provenance=edge_prov,
        gadgets=tuple(gadgets),
        fresh_color_count=5 * len(crossings),
        drawing=out_drawing,
    )


def bipartize_subdivision(g: Graph, coloring: EdgeColoring) -> ReductionOutput:
    """Subdivide every edge once; the output is bipartite.

    Edge j becomes two edges through the fresh vertex n+j: the half
    incident to the smaller endpoint keeps the color of j, the other
    half gets fresh color palette+j (all m fresh colors distinct).
    """
    if g.m == 0:
        raise EmptyGraph("nothing to subdivide")
    if len(coloring) != g.m:
        raise ValueError("coloring length does not match edge count")
    palette = coloring.palette_size
    vertex_prov = {i: f"orig:v{i}" for i in range(g.n)}
    edge_prov: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    colors: list[int] = []
    for j, (a, b) in enumerate(g.edges):
        mid = g.n + j
        vertex_prov[mid] = f"subdiv:e{j}"
        edge_prov[len(edges)] = f"keep:e{j}"
        edges.append((a, mid))
        colors.append(coloring.colors[j])
        edge_prov[len(edges)] = f"fresh:e{j}"
        edges.append((mid, b))
        colors.append(palette + j)
    return ReductionOutput(
        graph=Graph(g.n + g.m, tuple(edges)),
        edge_coloring=EdgeColoring(tuple(colors)),
        vertex_coloring=None,
        vertex_provenance=vertex_prov,
        edge_provenance=edge_prov,
        gadgets=(),
        fresh_color_count=g.m,
    )


def to_line_rvc(g: Graph, coloring: EdgeColoring) -> ReductionOutput:
    """Pendant-augmented line graph with the induced vertex coloring.

    One pendant vertex is attached to every vertex of g; the line graph
    of the result has one vertex per original edge (same id, colored
    with that edge's color) and one per pendant edge (all sharing the
    single fresh color).  Rainbow connectivity of the input equals
    rainbow vertex-connectivity of the output for verified inputs.
    """
    if g.n < 2 or not is_connected(g):
        raise PreconditionViolated("need a connected graph on >= 2 vertices")
    if len(coloring) != g.m:
        raise ValueError("coloring length does not match edge count")
    pendant_edges = [(i, g.n + i) for i in range(g.n)]
    g0 = Graph(2 * g.n, g.edges + tuple(pendant_edges))
    lg, _identity = line_graph(g0)
    fresh = coloring.palette_size
    vcolors = list(coloring.colors) + [fresh] * g.n
    vertex_prov = {j: f"edge:e{j}" for j in range(g.m)}
    vertex_prov.update({g.m + i: f"pendant:v{i}" for i in range(g.n)})
    edge_prov = {
        j: f"incidence:{lg.edges[j][0]}-{lg.edges[j][1]}" for j in range(lg.m)
    }
    return ReductionOutput(
        graph=lg,
        edge_coloring=None,
        vertex_coloring=VertexColoring(tuple(vcolors)),
        vertex_provenance=vertex_prov,
        edge_provenance=edge_prov,
        gadgets=(),
        fresh_color_count=1,
    )
