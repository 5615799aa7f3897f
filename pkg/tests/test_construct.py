import pytest

from rainbowcx.analysis import min_connected_dominating_set
from rainbowcx.construct import (
    cds_extension_coloring,
    color_cycle,
    color_cycle_graph,
    color_hamiltonian,
    color_outerplanar_diam2,
    color_outerplanar_diam3,
)
from rainbowcx.corpus import glued_fan
from rainbowcx.errors import NotHamiltonian, PreconditionViolated
from rainbowcx.generate import complete, cycle, fan, path, star
from rainbowcx.graphs import EdgeColoring, build_graph
from rainbowcx.solver import rc_exact
from rainbowcx.verify import is_rainbow_connected


def test_color_cycle_small():
    bc = color_cycle(3)
    assert bc.coloring.palette_size == 2 and bc.verified
    bc = color_cycle(5)
    assert bc.coloring.palette_size == 3 and bc.verified


def test_color_cycle_c6_opposite_edges_matched():
    bc = color_cycle(6)
    assert bc.coloring.colors == (0, 1, 2, 0, 1, 2)
    assert rc_exact(cycle(6)).value == 3 == bc.coloring.palette_size


def test_color_cycle_graph_relabelled():
    # C5 with scrambled vertex ids
    g = build_graph(5, [(0, 2), (2, 4), (1, 4), (1, 3), (0, 3)])
    bc = color_cycle_graph(g)
    assert bc.verified and bc.coloring.palette_size == 3
    assert is_rainbow_connected(g, bc.coloring).connected


def test_color_hamiltonian_c7():
    bc = color_hamiltonian(cycle(7))
    assert bc.coloring.palette_size == 4 and bc.verified
    assert bc.strategy == "hamiltonian"


def test_color_hamiltonian_k5_bound_not_optimum():
    bc = color_hamiltonian(complete(5))
    assert bc.coloring.palette_size <= 3 and bc.verified
    assert rc_exact(complete(5)).value == 1  # the bound is not tight here


def test_color_hamiltonian_star_rejected():
    with pytest.raises(NotHamiltonian):
        color_hamiltonian(star(4))


def test_cds_extension_hub_dominated():
    g = fan(7)
    d = min_connected_dominating_set(g)
    bc = cds_extension_coloring(g, d, EdgeColoring(()))
    assert bc.verified and bc.coloring.palette_size <= 3


def test_cds_extension_whole_graph_is_core():
    g = cycle(5)
    d = min_connected_dominating_set(g, size_cap=5)
    # force D = V by asking for the full vertex set
    from rainbowcx.analysis import CdsResult, induced_subgraph

    sub, relabel = induced_subgraph(g, tuple(range(5)))
    d_all = CdsResult(tuple(range(5)), sub, 5, relabel)
    inner = rc_exact(g).coloring
    bc = cds_extension_coloring(g, d_all, inner)
    assert bc.coloring == inner
    assert bc.coloring.palette_size <= inner.palette_size + 3


def test_cds_extension_min_degree_precondition():
    g = path(4)
    d = min_connected_dominating_set(g)
    with pytest.raises(PreconditionViolated):
        cds_extension_coloring(g, d, rc_exact(d.induced_subgraph).coloring)


def test_diam2_fan5_explicit_two_coloring():
    g = fan(5)
    bc = color_outerplanar_diam2(g)
    assert bc.strategy == "fan_small"
    assert bc.coloring.palette_size == 2
    # the explicit two-coloring, frozen
    assert bc.coloring.colors == (0, 1, 0, 1, 0, 0, 1)
    assert rc_exact(g).value == 2


def test_diam2_fan8_three_colors():
    g = fan(8)
    bc = color_outerplanar_diam2(g)
    assert bc.strategy == "fan_general"
    assert bc.coloring.palette_size == 3
    assert rc_exact(g, edge_limit=g.m).value == 3


def test_diam2_c5_cycle_strategy():
    bc = color_outerplanar_diam2(cycle(5))
    assert bc.strategy == "cycle" and bc.coloring.palette_size <= 3


def test_diam2_four_cycle_shape_two_colors():
    # 4-cycle with a degree-2 vertex hung off two consecutive cycle
    # vertices: not a fan, handled by the direct 2-color search
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (2, 4)])
    bc = color_outerplanar_diam2(g)
    assert bc.strategy == "c4_case" and bc.coloring.palette_size == 2
    assert rc_exact(g).value == 2


def test_diam2_cut_vertex_glued_fan():
    g = glued_fan([2, 2])  # bowtie
    bc = color_outerplanar_diam2(g)
    assert bc.strategy == "cut_vertex"
    assert bc.coloring.palette_size <= 3 and bc.verified


def test_diam2_rejects_foreign_graphs():
    with pytest.raises(PreconditionViolated):
        color_outerplanar_diam2(complete(4))  # not outerplanar
    with pytest.raises(PreconditionViolated):
        color_outerplanar_diam2(cycle(6))  # diameter 3


def test_diam3_cycles():
    bc = color_outerplanar_diam3(cycle(7))
    assert bc.strategy == "cycle" and bc.coloring.palette_size == 4
    bc = color_outerplanar_diam3(cycle(6))
    assert bc.strategy == "cycle" and bc.coloring.palette_size == 3


def test_diam3_with_chords():
    # C7 plus one chord keeps diameter 3 and stays outerplanar
    g = build_graph(7, [(i, (i + 1) % 7) for i in range(7)] + [(0, 2)])
    bc = color_outerplanar_diam3(g)
    assert bc.verified and bc.coloring.palette_size <= 6
    assert is_rainbow_connected(g, bc.coloring).connected


def test_diam3_rejects_wrong_diameter():
    with pytest.raises(PreconditionViolated):
        color_outerplanar_diam3(fan(6))


def test_bound_claims_hold():
    for n in (5, 6, 8, 9):
        g = fan(n)
        bc = color_outerplanar_diam2(g)
        assert bc.coloring.palette_size <= bc.bound_claimed == 3
