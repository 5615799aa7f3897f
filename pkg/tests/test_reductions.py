import random
from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from rainbowcx.corpus import drawn_instances, random_coloring
from rainbowcx.errors import DegenerateDrawing, EmptyGraph, PreconditionViolated
from rainbowcx.generate import complete, convex_drawing, cycle, random_connected
from rainbowcx.graphs import Drawing, EdgeColoring, Graph, build_graph
from rainbowcx.reductions import (
    bipartize_subdivision,
    detect_crossings,
    planarize,
    split_multicrossed_edges,
    to_line_rvc,
)
from rainbowcx.verify import (
    PairWitness,
    is_rainbow_connected,
    is_rainbow_vertex_connected,
    validate_edge_witness,
)


def P(x, y):
    return (F(x), F(y))


def test_detect_crossings_convex_c4_empty():
    g = cycle(4)
    assert detect_crossings(g, convex_drawing(g)) == []


def test_detect_crossings_convex_k4_single():
    g = complete(4)
    crs = detect_crossings(g, convex_drawing(g))
    assert len(crs) == 1
    cr = crs[0]
    assert g.edges[cr.edge_a] == (0, 2) and g.edges[cr.edge_b] == (1, 3)


def test_detect_crossings_rejects_concurrent_edges():
    # three segments through the origin
    g = build_graph(6, [(0, 1), (2, 3), (4, 5)])
    d = Drawing((P(-1, 0), P(1, 0), P(0, -1), P(0, 1), P(-1, -1), P(1, 1)))
    with pytest.raises(DegenerateDrawing):
        detect_crossings(g, d)


def test_detect_crossings_rejects_collinear_overlap():
    g = build_graph(4, [(0, 1), (2, 3)])
    d = Drawing((P(0, 0), P(2, 0), P(1, 0), P(3, 0)))
    with pytest.raises(DegenerateDrawing):
        detect_crossings(g, d)


def test_split_identity_when_single_crossings():
    g = complete(4)
    c = EdgeColoring((0, 1, 2, 0, 1, 2))
    out = split_multicrossed_edges(g, c, convex_drawing(g))
    assert out.graph == g and out.edge_coloring == c
    assert out.fresh_color_count == 0


def test_split_doubly_crossed_edge():
    # horizontal edge crossed by two verticals
    g = build_graph(6, [(0, 1), (2, 3), (4, 5)])
    d = Drawing((P(0, 0), P(6, 0), P(1, -1), P(1, 1), P(4, -1), P(4, 1)))
    c = EdgeColoring((0, 1, 2))
    out = split_multicrossed_edges(g, c, d)
    assert out.graph.n == g.n + 1
    assert out.graph.m == g.m + 1
    assert out.fresh_color_count == 1
    assert out.edge_coloring.palette_size == 4
    # afterwards each edge crosses at most one other
    per_edge = {}
    for cr in detect_crossings(out.graph, out.drawing):
        for e in (cr.edge_a, cr.edge_b):
            per_edge[e] = per_edge.get(e, 0) + 1
    assert all(k == 1 for k in per_edge.values())
    # and the planarization pipeline now accepts it
    red = planarize(out.graph, out.edge_coloring, out.drawing)
    assert len(red.gadgets) == 2


def test_split_preserves_verdict():
    rng = random.Random(31)
    checked = 0
    for g, coloring, d in drawn_instances(40, 17):
        out = split_multicrossed_edges(g, coloring, d)
        if out.fresh_color_count == 0:
            continue
        checked += 1
        assert (
            is_rainbow_connected(g, coloring).connected
            == is_rainbow_connected(out.graph, out.edge_coloring).connected
        )
    assert checked >= 3


def test_planarize_zero_crossings_identity():
    g = cycle(5)
    c = EdgeColoring((0, 1, 2, 0, 1))
    out = planarize(g, c, convex_drawing(g))
    assert out.graph == g and out.edge_coloring == c and out.gadgets == ()


def test_planarize_convex_k4_counts():
    g = complete(4)
    c = EdgeColoring((0, 1, 2, 0, 1, 2))
    out = planarize(g, c, convex_drawing(g))
    assert out.graph.n == 13 and out.graph.m == 20
    assert out.edge_coloring.palette_size == c.palette_size + 5
    assert out.fresh_color_count == 5
    gadget = out.gadgets[0]
    assert sorted(gadget.grid_vertices) == sorted(
        ["nw", "n", "ne", "w", "c", "e", "sw", "s", "se"]
    )
    assert len(set(gadget.grid_vertices.values())) == 9
    assert gadget.removed_edges == (1, 4)
    for e in gadget.removed_edges:
        assert g.edges[e] not in out.graph.edges


def test_planarize_gadget_coloring_table():
    g = complete(4)
    c = EdgeColoring((0, 1, 2, 0, 1, 2))
    out = planarize(g, c, convex_drawing(g))
    gadget = out.gadgets[0]
    grid = gadget.grid_vertices
    f1, f2, f3, f4, f5 = gadget.fresh_colors
    ea, eb = gadget.removed_edges
    alpha, beta = c.colors[ea], c.colors[eb]
    x, y = g.edges[ea]
    ecol = {}
    for (a, b), col in zip(out.graph.edges, out.edge_coloring.colors):
        ecol[(a, b)] = col

    def col(p, q):
        return ecol[(min(p, q), max(p, q))]

    assert col(x, grid["nw"]) == alpha
    assert col(grid["nw"], grid["w"]) == alpha
    assert col(grid["w"], grid["sw"]) == alpha
    assert col(grid["n"], grid["ne"]) == alpha
    assert col(y, grid["se"]) == f5
    assert col(grid["nw"], grid["n"]) == f1
    assert col(grid["s"], grid["sw"]) == f1
    assert col(grid["n"], grid["c"]) == f2
    assert col(grid["ne"], grid["e"]) == f2
    assert col(grid["c"], grid["e"]) == f3
    assert col(grid["c"], grid["w"]) == f4
    assert col(grid["c"], grid["s"]) == f4
    assert col(grid["e"], grid["se"]) == f4
    # the second crossed edge attaches at ne (color f5) and sw (color beta);
    # which endpoint is which depends on the drawing's orientation
    p, q = g.edges[eb]
    u = p if (min(p, grid["ne"]), max(p, grid["ne"])) in ecol else q
    v = q if u == p else p
    assert col(u, grid["ne"]) == f5
    assert col(v, grid["sw"]) == beta
    assert col(grid["s"], grid["se"]) == beta


def test_planarize_claim_path_is_rainbow():
    from rainbowcx.verify import rainbow_path_exists

    g = complete(4)
    c = EdgeColoring((0, 1, 2, 0, 1, 2))
    out = planarize(g, c, convex_drawing(g))
    gadget = out.gadgets[0]
    grid = gadget.grid_vertices
    x, y = g.edges[gadget.removed_edges[0]]
    # the diagonal grid walk is a valid rainbow witness for (x, y) ...
    diagonal = PairWitness(
        x, y, (x, grid["nw"], grid["n"], grid["c"], grid["e"], grid["se"], y)
    )
    assert validate_edge_witness(out.graph, out.edge_coloring, diagonal)
    # ... and the search indeed produces a witness for that pair
    assert rainbow_path_exists(out.graph, out.edge_coloring, x, y) is not None


def test_gadget_cannot_host_two_disjoint_traversals():
    # Isolated crossing: two edges drawn crossing, nothing else.  Every
    # rainbow route x->y through the grid and every route u->v share at
    # least three colors, so one gadget can never replace both crossed
    # edges of a single path.
    g = build_graph(4, [(0, 1), (2, 3)])
    d = Drawing((P(0, 0), P(2, 2), P(2, 0), P(0, 2)))
    c = EdgeColoring((0, 1))
    out = planarize(g, c, d)
    gadget = out.gadgets[0]
    x, y = g.edges[gadget.removed_edges[0]]
    u, v = g.edges[gadget.removed_edges[1]]

    def rainbow_routes(a, b):
        og, oc = out.graph, out.edge_coloring
        found = []

        def dfs(w, seen, mask, colors):
            if w == b:
                found.append(frozenset(colors))
                return
            for nxt, j in og.adjacency[w]:
                bit = 1 << oc.colors[j]
                if nxt in seen or mask & bit:
                    continue
                dfs(nxt, seen | {nxt}, mask | bit, colors | {oc.colors[j]})

        dfs(a, {a}, 0, set())
        return found

    xy_routes = rainbow_routes(x, y)
    uv_routes = rainbow_routes(u, v)
    assert xy_routes and uv_routes
    assert all(
        len(r1 & r2) >= 3 for r1 in xy_routes for r2 in uv_routes
    )


def test_planarize_requires_single_crossing_per_edge():
    g = build_graph(6, [(0, 1), (2, 3), (4, 5)])
    d = Drawing((P(0, 0), P(6, 0), P(1, -1), P(1, 1), P(4, -1), P(4, 1)))
    with pytest.raises(PreconditionViolated):
        planarize(g, EdgeColoring((0, 1, 2)), d)


def test_planarize_provenance_total_and_injective():
    g = complete(4)
    c = EdgeColoring((0, 1, 2, 0, 1, 2))
    out = planarize(g, c, convex_drawing(g))
    assert set(out.vertex_provenance) == set(range(out.graph.n))
    assert set(out.edge_provenance) == set(range(out.graph.m))
    fresh_tags = [t for t in out.vertex_provenance.values() if t.startswith("gadget")]
    assert len(fresh_tags) == len(set(fresh_tags)) == 9


def test_bipartize_k2():
    g = build_graph(2, [(0, 1)])
    out = bipartize_subdivision(g, EdgeColoring((0,)))
    assert out.graph.n == 3 and out.graph.m == 2
    assert out.edge_coloring.colors == (0, 1)


def test_bipartize_triangle_gives_c6():
    g = cycle(3)
    c = EdgeColoring((0, 0, 0))
    out = bipartize_subdivision(g, c)
    assert out.graph.n == 6 and out.graph.m == 6
    assert all(d == 2 for d in out.graph.degrees)
    assert (
        is_rainbow_connected(g, c).connected
        == is_rainbow_connected(out.graph, out.edge_coloring).connected
    )


def _is_bipartite(g: Graph) -> bool:
    color = {}
    for s in range(g.n):
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = color[v] ^ 1
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def test_bipartize_always_bipartite_with_fresh_colors():
    rng = random.Random(12)
    for _ in range(20):
        n = rng.randint(2, 6)
        g = random_connected(n, rng.randint(n - 1, n * (n - 1) // 2), seed=rng.randrange(1 << 30))
        c = random_coloring(rng, g.m, rng.randint(1, 3))
        out = bipartize_subdivision(g, c)
        assert _is_bipartite(out.graph)
        assert out.graph.n == g.n + g.m and out.graph.m == 2 * g.m
        assert out.edge_coloring.palette_size == c.palette_size + g.m
        # half at the smaller endpoint keeps the original color
        for j, (a, b) in enumerate(g.edges):
            assert out.graph.edges[2 * j] == (min(a, g.n + j), max(a, g.n + j)) or (
                out.graph.edges[2 * j] == (a, g.n + j)
            )
            assert out.edge_coloring.colors[2 * j] == c.colors[j]


def test_bipartize_empty_graph_rejected():
    with pytest.raises(EmptyGraph):
        bipartize_subdivision(build_graph(3, []), EdgeColoring(()))


def test_to_line_k2():
    g = build_graph(2, [(0, 1)])
    out = to_line_rvc(g, EdgeColoring((0,)))
    assert out.graph.n == 3 and out.graph.m == 2
    assert out.vertex_coloring.colors == (0, 1, 1)
    assert is_rainbow_vertex_connected(out.graph, out.vertex_coloring).connected


def test_to_line_k3_distinct_colors():
    g = cycle(3)
    c = EdgeColoring((0, 1, 2))
    out = to_line_rvc(g, c)
    assert is_rainbow_connected(g, c).connected
    assert is_rainbow_vertex_connected(out.graph, out.vertex_coloring).connected


def test_to_line_counts():
    rng = random.Random(4)
    for _ in range(15):
        n = rng.randint(2, 6)
        g = random_connected(n, rng.randint(n - 1, n * (n - 1) // 2), seed=rng.randrange(1 << 30))
        c = random_coloring(rng, g.m, rng.randint(1, 3))
        out = to_line_rvc(g, c)
        assert out.graph.n == g.m + g.n
        assert out.vertex_coloring.palette_size == c.palette_size + 1
        assert out.fresh_color_count == 1


def test_to_line_requires_connected():
    with pytest.raises(PreconditionViolated):
        to_line_rvc(build_graph(4, [(0, 1), (2, 3)]), EdgeColoring((0, 1)))


def test_planar_bipartite_composition_on_convex_k4():
    g = complete(4)
    c = EdgeColoring((0, 1, 2, 0, 1, 2))
    planar = planarize(g, c, convex_drawing(g))
    composed = bipartize_subdivision(planar.graph, planar.edge_coloring)
    assert _is_bipartite(composed.graph)
    assert composed.graph.n == planar.graph.n + planar.graph.m
    # the composed palette exceeds the default bitmask bound; raise it
    verdict = is_rainbow_connected(
        composed.graph, composed.edge_coloring, palette_bound=28
    )
    assert is_rainbow_connected(g, c).connected == verdict.connected


@st.composite
def _colored_connected(draw):
    from rainbowcx.graphs import dense_colors

    n = draw(st.integers(2, 5))
    pool = list(combinations(range(n), 2))
    extra = draw(st.lists(st.sampled_from(pool), unique=True, max_size=len(pool)))
    # spanning path keeps it connected
    base = [(i, i + 1) for i in range(n - 1)]
    g = build_graph(n, sorted(set(base) | set(extra)))
    palette = draw(st.integers(1, 3))
    colors = draw(st.lists(st.integers(0, palette - 1), min_size=g.m, max_size=g.m))
    return g, EdgeColoring(dense_colors(colors))


@given(_colored_connected())
def test_bipartize_preserves_verdict_property(gc):
    g, coloring = gc
    out = bipartize_subdivision(g, coloring)
    assert (
        is_rainbow_connected(g, coloring).connected
        == is_rainbow_connected(out.graph, out.edge_coloring).connected
    )


@given(_colored_connected())
def test_to_line_preserves_verdict_property(gc):
    g, coloring = gc
    out = to_line_rvc(g, coloring)
    assert (
        is_rainbow_connected(g, coloring).connected
        == is_rainbow_vertex_connected(out.graph, out.vertex_coloring).connected
    )
