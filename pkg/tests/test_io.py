from fractions import Fraction

import pytest

from rainbowcx.errors import ParseError, VertexOutOfRange
from rainbowcx.graphs import Drawing, EdgeColoring, VertexColoring
from rainbowcx.generate import complete, convex_drawing, cycle
from rainbowcx.io import (
    parse_auto,
    parse_colored_graph,
    parse_drawing,
    parse_graph,
    parse_vertex_colored_graph,
    serialize_colored_graph,
    serialize_drawing,
    serialize_graph,
    serialize_vertex_colored_graph,
)

TRIANGLE = "3 3\n0 1\n1 2\n0 2\n"


def test_parse_triangle():
    g = parse_graph(TRIANGLE)
    assert g.n == 3 and g.edges == ((0, 1), (1, 2), (0, 2))


def test_parse_colored_triangle():
    g, c = parse_colored_graph("3 3\n0 1 0\n1 2 1\n0 2 0\n")
    assert c.colors == (0, 1, 0) and c.palette_size == 2


def test_comments_and_blank_lines_ignored():
    g = parse_graph("# a triangle\n\n3 3\n0 1\n# middle\n1 2\n0 2\n")
    assert g.m == 3


def test_round_trip_graph():
    g = cycle(5)
    assert parse_graph(serialize_graph(g)) == g


def test_round_trip_canonical_text():
    t = serialize_graph(cycle(4))
    assert serialize_graph(parse_graph(t)) == t


def test_round_trip_colored():
    g = cycle(4)
    c = EdgeColoring((0, 1, 0, 1))
    text = serialize_colored_graph(g, c)
    g2, c2 = parse_colored_graph(text)
    assert (g2, c2) == (g, c)
    assert serialize_colored_graph(g2, c2) == text


def test_round_trip_drawing():
    g = complete(4)
    d = convex_drawing(g)
    text = serialize_drawing(g, d)
    g2, d2, c2 = parse_drawing(text)
    assert g2 == g and d2 == d and c2 is None
    assert serialize_drawing(g2, d2) == text


def test_round_trip_colored_drawing():
    g = cycle(3)
    d = Drawing(((Fraction(0), Fraction(0)), (Fraction(1, 2), Fraction(1)), (Fraction(2), Fraction(0))))
    c = EdgeColoring((0, 1, 2))
    text = serialize_drawing(g, d, c)
    g2, d2, c2 = parse_drawing(text)
    assert (g2, d2, c2) == (g, d, c)


def test_round_trip_vertex_colored():
    g = cycle(4)
    vc = VertexColoring((0, 1, 0, 1))
    text = serialize_vertex_colored_graph(g, vc)
    g2, vc2 = parse_vertex_colored_graph(text)
    assert (g2, vc2) == (g, vc)
    assert serialize_vertex_colored_graph(g2, vc2) == text


def test_parse_auto_variants():
    assert parse_auto(TRIANGLE) == parse_graph(TRIANGLE)
    g, c = parse_auto("3 3\n0 1 0\n1 2 1\n0 2 0\n")
    assert isinstance(c, EdgeColoring)
    g, vc = parse_auto(serialize_vertex_colored_graph(cycle(3), VertexColoring((0, 0, 1))))
    assert isinstance(vc, VertexColoring)
    out = parse_auto(serialize_drawing(cycle(3), convex_drawing(cycle(3))))
    assert isinstance(out[1], Drawing)


def test_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        parse_graph("3 2\n0 1\nnope\n")
    assert err.value.line == 3
    with pytest.raises(ParseError):
        parse_graph("")
    with pytest.raises(ParseError):
        parse_graph("3 2\n0 1\n")  # missing edge line
    with pytest.raises(ParseError):
        parse_colored_graph("2 1\n0 1\n")  # color missing


def test_semantic_errors_propagate():
    with pytest.raises(VertexOutOfRange):
        parse_graph("2 1\n0 2\n")


def test_mixed_color_lines_rejected():
    with pytest.raises(ParseError):
        parse_auto("3 2\n0 1 0\n1 2\n")


def test_loose_color_ids_renumbered_dense():
    _, c = parse_colored_graph("3 2\n0 1 7\n1 2 9\n")
    assert c.colors == (0, 1)
