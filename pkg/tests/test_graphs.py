from fractions import Fraction

import pytest

from rainbowcx.errors import DuplicateEdge, SelfLoop, VertexOutOfRange
from rainbowcx.graphs import (
    Drawing,
    EdgeColoring,
    VertexColoring,
    build_graph,
    dense_colors,
    vertex_pairs,
)


def test_build_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.n == 3 and g.m == 3
    assert g.edges == ((0, 1), (1, 2), (0, 2))


def test_build_normalizes_endpoint_order():
    g = build_graph(3, [(2, 0), (2, 1)])
    assert g.edges == ((0, 2), (1, 2))
    assert g.edge_index[(0, 2)] == 0


def test_duplicate_edge_rejected():
    with pytest.raises(DuplicateEdge):
        build_graph(4, [(0, 1), (0, 1)])
    with pytest.raises(DuplicateEdge):
        build_graph(4, [(0, 1), (1, 0)])


def test_vertex_out_of_range_rejected():
    with pytest.raises(VertexOutOfRange):
        build_graph(2, [(0, 2)])


def test_self_loop_rejected():
    with pytest.raises(SelfLoop):
        build_graph(3, [(1, 1)])


def test_adjacency_and_degrees():
    g = build_graph(4, [(0, 1), (1, 2), (1, 3)])
    assert g.degrees == (1, 3, 1, 1)
    assert g.adjacency[1] == ((0, 0), (2, 1), (3, 2))
    assert g.neighbors(1) == (0, 2, 3)
    assert g.has_edge(3, 1) and not g.has_edge(0, 3)


def test_csr_shape():
    g = build_graph(3, [(0, 1), (1, 2)])
    indptr, nbr, eid = g.csr
    assert list(indptr) == [0, 1, 3, 4]
    assert list(nbr) == [1, 0, 2, 1]
    assert list(eid) == [0, 0, 1, 1]


def test_vertex_pairs_lexicographic():
    assert list(vertex_pairs(3)) == [(0, 1), (0, 2), (1, 2)]


def test_edge_coloring_dense_ok():
    c = EdgeColoring((0, 1, 0, 2))
    assert c.palette_size == 3
    assert len(c) == 4


def test_edge_coloring_gap_rejected():
    with pytest.raises(ValueError):
        EdgeColoring((0, 2))
    with pytest.raises(ValueError):
        VertexColoring((1,))


def test_dense_colors_first_occurrence():
    assert dense_colors((5, 3, 5, 0)) == (0, 1, 0, 2)


def test_drawing_requires_distinct_points():
    with pytest.raises(ValueError):
        Drawing(((Fraction(0), Fraction(0)), (Fraction(0), Fraction(0))))


def test_graph_values_hashable_and_equal():
    a = build_graph(3, [(0, 1)])
    b = build_graph(3, [(1, 0)])
    assert a == b and hash(a) == hash(b)
