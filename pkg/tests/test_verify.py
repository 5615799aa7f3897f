import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from rainbowcx.analysis import is_connected
from rainbowcx.corpus import (
    oracle_edge_verdict,
    oracle_vertex_verdict,
    random_coloring,
    random_vertex_coloring,
)
from rainbowcx.errors import PaletteTooLarge
from rainbowcx.generate import complete, cycle, fan, path, random_connected
from rainbowcx.graphs import EdgeColoring, VertexColoring, build_graph
from rainbowcx.verify import (
    is_rainbow_connected,
    is_rainbow_vertex_connected,
    rainbow_path_exists,
    validate_edge_witness,
    validate_vertex_witness,
    vertex_rainbow_path_exists,
)


def test_k2_single_edge_witness():
    g = build_graph(2, [(0, 1)])
    w = rainbow_path_exists(g, EdgeColoring((0,)), 0, 1)
    assert w.path == (0, 1)


def test_p3_monochromatic_ends_unreachable():
    g = path(3)
    assert rainbow_path_exists(g, EdgeColoring((0, 0)), 0, 2) is None


def test_k4_monochromatic_rainbow_connected():
    v = is_rainbow_connected(complete(4), EdgeColoring((0,) * 6))
    assert v.connected


def test_fan5_reference_two_coloring_connected():
    g = fan(5)
    by_pair = {(0, 1): 0, (0, 4): 0, (1, 3): 0, (2, 3): 0, (1, 4): 1, (3, 4): 1, (1, 2): 1}
    coloring = EdgeColoring(tuple(by_pair[e] for e in g.edges))
    assert is_rainbow_connected(g, coloring).connected


def test_c6_alternating_two_colors_fails():
    v = is_rainbow_connected(cycle(6), EdgeColoring((0, 1, 0, 1, 0, 1)))
    assert not v.connected
    assert v.counterexample == (0, 3)


def test_witnesses_on_request():
    v = is_rainbow_connected(cycle(4), EdgeColoring((0, 1, 0, 1)), with_witnesses=True)
    assert v.connected and len(v.witnesses) == 6
    g = cycle(4)
    for w in v.witnesses:
        assert validate_edge_witness(g, EdgeColoring((0, 1, 0, 1)), w)


def test_vertex_adjacent_pair_always_witnessed():
    g = path(4)
    vc = VertexColoring((0, 0, 0, 0))
    w = vertex_rainbow_path_exists(g, vc, 1, 2)
    assert w.path == (1, 2)


def test_vertex_p4_internal_colors():
    g = path(4)
    assert vertex_rainbow_path_exists(g, VertexColoring((0, 0, 0, 0)), 0, 3) is None
    w = vertex_rainbow_path_exists(g, VertexColoring((0, 0, 1, 0)), 0, 3)
    assert w.path == (0, 1, 2, 3)


def test_complete_any_vertex_coloring_connected():
    for n in (3, 5):
        vc = VertexColoring((0,) * n)
        assert is_rainbow_vertex_connected(complete(n), vc).connected


def test_monochromatic_cycles_vertex_variant():
    # C5 has diameter 2: every pair needs at most one internal vertex,
    # so a single color suffices.  C6 has an opposite pair at distance
    # 3, which needs two internal vertices with distinct colors.
    assert is_rainbow_vertex_connected(cycle(5), VertexColoring((0,) * 5)).connected
    v = is_rainbow_vertex_connected(cycle(6), VertexColoring((0,) * 6))
    assert not v.connected and v.counterexample == (0, 3)


def test_palette_bound_enforced():
    g = path(4)
    with pytest.raises(PaletteTooLarge):
        is_rainbow_connected(g, EdgeColoring((0, 1, 2)), palette_bound=2)


def test_verifier_matches_oracle_random():
    rng = random.Random(7)
    for _ in range(120):
        n = rng.randint(2, 7)
        m = rng.randint(n - 1, n * (n - 1) // 2)
        g = random_connected(n, m, seed=rng.randrange(1 << 30))
        c = random_coloring(rng, g.m, rng.randint(1, 4))
        got = is_rainbow_connected(g, c)
        ok, pair = oracle_edge_verdict(g, c)
        assert got.connected == ok and got.counterexample == pair
        vc = random_vertex_coloring(rng, g.n, rng.randint(1, 4))
        gotv = is_rainbow_vertex_connected(g, vc)
        okv, pairv = oracle_vertex_verdict(g, vc)
        assert gotv.connected == okv and gotv.counterexample == pairv


@st.composite
def colored_graphs(draw):
    n = draw(st.integers(2, 6))
    pool = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pool), unique=True, min_size=n - 1, max_size=len(pool)))
    g = build_graph(n, edges)
    palette = draw(st.integers(1, 4))
    colors = draw(
        st.lists(st.integers(0, palette - 1), min_size=g.m, max_size=g.m)
    )
    from rainbowcx.graphs import dense_colors

    return g, EdgeColoring(dense_colors(colors))


@given(colored_graphs(), st.data())
def test_refining_a_color_class_preserves_truth(gc, data):
    g, coloring = gc
    if not is_rainbow_connected(g, coloring).connected:
        return
    # rename part of one color class to a brand-new color
    cls = data.draw(st.integers(0, coloring.palette_size - 1))
    members = [j for j, c in enumerate(coloring.colors) if c == cls]
    chosen = data.draw(st.lists(st.sampled_from(members), unique=True, min_size=1))
    fresh = coloring.palette_size
    colors = list(coloring.colors)
    for j in chosen:
        colors[j] = fresh
    from rainbowcx.graphs import dense_colors

    refined = EdgeColoring(dense_colors(colors))
    assert is_rainbow_connected(g, refined).connected


@given(colored_graphs())
def test_all_distinct_colors_equals_connectivity(gc):
    g, _ = gc
    coloring = EdgeColoring(tuple(range(g.m)))
    assert is_rainbow_connected(g, coloring).connected == is_connected(g)
    vc = VertexColoring(tuple(range(g.n)))
    assert is_rainbow_vertex_connected(g, vc).connected == is_connected(g)


def test_sparse_fallback_on_huge_state_spaces():
    # n * 2^palette above the dense threshold routes to the dict-based
    # search; an all-distinct star is rainbow connected iff connected.
    from rainbowcx.generate import star

    g = star(25)  # 24 edges, palette 24 -> 25 * 2^24 states
    v = is_rainbow_connected(g, EdgeColoring(tuple(range(24))))
    assert v.connected
    g2 = star(24)
    colors = list(range(23))
    colors[22] = 0  # leaves 1 and 23 now share their spoke color
    v2 = is_rainbow_connected(g2, EdgeColoring(tuple(colors)))
    assert not v2.connected and v2.counterexample == (1, 23)
    v3 = is_rainbow_connected(g2, EdgeColoring((0,) * 23))
    assert not v3.connected and v3.counterexample == (1, 2)


def test_many_vertex_graphs_use_per_source_reach():
    # n > 126 exceeds the stamped kernel's source budget
    from rainbowcx.generate import cycle as make_cycle

    g = make_cycle(130)
    colors = tuple(j % 3 for j in range(130))
    v = is_rainbow_connected(g, EdgeColoring(colors))
    assert not v.connected
    vc = VertexColoring(tuple(j % 2 for j in range(130)))
    assert not is_rainbow_vertex_connected(g, vc).connected


def test_witness_validators_reject_junk():
    g = path(4)
    c = EdgeColoring((0, 1, 2))
    from rainbowcx.verify import PairWitness

    assert not validate_edge_witness(g, c, PairWitness(0, 3, (0, 2, 3)))  # not a path
    assert not validate_edge_witness(g, c, PairWitness(0, 3, (0, 1, 0, 1, 2, 3)))
    vc = VertexColoring((0, 1, 1, 0))
    assert not validate_vertex_witness(g, vc, PairWitness(0, 3, (0, 1, 2, 3)))
