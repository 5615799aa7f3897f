"""Text formats for graphs, colorings and drawings.

Edge-list format: first non-comment line is ``n m``, followed by ``m``
lines ``u v`` (0-based decimal).  Colored variant: ``u v c``.  Drawing
variant: after the header come ``n`` position lines ``px/qx py/qy``
(exact rationals, ``/1`` allowed) and then the ``m`` edge lines, which
may carry colors.  Vertex-colored variant: after the header come ``n``
single-token lines (one color per vertex) and then the edge lines.
Lines starting with ``#`` and blank lines are ignored everywhere.
Encoding is ASCII with LF line endings; serializers always emit the
canonical form (normalized edge order, ``/``-form coordinates), for
which ``serialize(parse(t)) == t``.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .graphs import Drawing, EdgeColoring, Graph, VertexColoring, dense_colors


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((i, line))
    return out


def _parse_header(lines: list[tuple[int, str]]) -> tuple[int, int]:
    if not lines:
        raise ParseError(1, "empty input")
    lineno, line = lines[0]
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(lineno, f"expected header 'n m', got {line!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(lineno, f"non-integer header {line!r}") from None
    if n < 0 or m < 0:
        raise ParseError(lineno, "negative counts in header")
    return n, m


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, f"expected integer, got {token!r}") from None


def _parse_edges(
    lines: list[tuple[int, str]], n: int, m: int, colored: bool | None
) -> tuple[Graph, EdgeColoring | None]:
    if len(lines) != m:
        lineno = lines[0][0] if lines else 1
        raise ParseError(lineno, f"expected {m} edge lines, found {len(lines)}")
    edges = []
    colors = []
    saw_color = None
    for lineno, line in lines:
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ParseError(lineno, f"expected 'u v' or 'u v c', got {line!r}")
        has_color = len(parts) == 3
        if saw_color is None:
            saw_color = has_color
        elif saw_color != has_color:
            raise ParseError(lineno, "mixed colored and uncolored edge lines")
        if colored is True and not has_color:
            raise ParseError(lineno, "edge line is missing a color")
        if colored is False and has_color:
            raise ParseError(lineno, "unexpected color on edge line")
        u, v = _parse_int(parts[0], lineno), _parse_int(parts[1], lineno)
        edges.append((u, v))
        if has_color:
            c = _parse_int(parts[2], lineno)
            if c < 0:
                raise ParseError(lineno, f"negative color {c}")
            colors.append(c)
    g = Graph(n, tuple(edges))
    coloring = EdgeColoring(dense_colors(colors)) if saw_color else None
    return g, coloring


def parse_graph(text: str) -> Graph:
    """Parse a plain edge-list file."""
    lines = _data_lines(text)
    n, m = _parse_header(lines)
    g, coloring = _parse_edges(lines[1:], n, m, colored=False)
    return g


def parse_colored_graph(text: str) -> tuple[Graph, EdgeColoring]:
    """Parse an edge-list file whose edge lines carry colors."""
    lines = _data_lines(text)
    n, m = _parse_header(lines)
    g, coloring = _parse_edges(lines[1:], n, m, colored=True)
    assert coloring is not None
    return g, coloring


def _parse_fraction(token: str, lineno: int) -> Fraction:
    try:
        if "/" in token:
            p, q = token.split("/", 1)
            return Fraction(int(p), int(q))
        return Fraction(int(token))
    except (ValueError, ZeroDivisionError):
        raise ParseError(lineno, f"bad rational {token!r}") from None


def parse_drawing(text: str) -> tuple[Graph, Drawing, EdgeColoring | None]:
    """Parse a drawing file: header, n position lines, m edge lines."""
    lines = _data_lines(text)
    n, m = _parse_header(lines)
    body = lines[1:]
    if len(body) < n:
        raise ParseError(lines[0][0], f"expected {n} position lines")
    positions = []
    for lineno, line in body[:n]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected 'x y' position, got {line!r}")
        positions.append(
            (_parse_fraction(parts[0], lineno), _parse_fraction(parts[1], lineno))
        )
    g, coloring = _parse_edges(body[n:], n, m, colored=None)
    try:
        drawing = Drawing(tuple(positions))
    except ValueError as exc:
        raise ParseError(body[0][0] if body else 1, str(exc)) from None
    return g, drawing, coloring


def parse_vertex_colored_graph(text: str) -> tuple[Graph, VertexColoring]:
    """Parse the vertex-colored variant: header, n color lines, m edges."""
    lines = _data_lines(text)
    n, m = _parse_header(lines)
    body = lines[1:]
    if len(body) < n:
        raise ParseError(lines[0][0], f"expected {n} vertex color lines")
    colors = []
    for lineno, line in body[:n]:
        parts = line.split()
        if len(parts) != 1:
            raise ParseError(lineno, f"expected one color, got {line!r}")
        c = _parse_int(parts[0], lineno)
        if c < 0:
            raise ParseError(lineno, f"negative color {c}")
        colors.append(c)
    g, _ = _parse_edges(body[n:], n, m, colored=False)
    return g, VertexColoring(dense_colors(colors))


def parse_auto(text: str):
    """Sniff the variant and parse.

    Returns one of ``Graph``, ``(Graph, EdgeColoring)``,
    ``(Graph, VertexColoring)`` or ``(Graph, Drawing[, EdgeColoring])``.
    Detection keys off the first data line after the header: a ``/``
    means drawing coordinates, a single token means vertex colors, three
    tokens mean colored edges.
    """
    lines = _data_lines(text)
    n, m = _parse_header(lines)
    body = lines[1:]
    if body:
        first = body[0][1].split()
        if any("/" in t for t in first):
            g, d, c = parse_drawing(text)
            return (g, d) if c is None else (g, d, c)
        if len(first) == 1:
            return parse_vertex_colored_graph(text)
        if len(first) == 3:
            return parse_colored_graph(text)
    return parse_graph(text)


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def serialize_colored_graph(g: Graph, coloring: EdgeColoring) -> str:
    if len(coloring) != g.m:
        raise ValueError("coloring length does not match edge count")
    lines = [f"{g.n} {g.m}"]
    lines.extend(
        f"{u} {v} {c}" for (u, v), c in zip(g.edges, coloring.colors)
    )
    return "\n".join(lines) + "\n"


def serialize_drawing(
    g: Graph, drawing: Drawing, coloring: EdgeColoring | None = None
) -> str:
    if len(drawing) != g.n:
        raise ValueError("drawing length does not match vertex count")
    lines = [f"{g.n} {g.m}"]
    for x, y in drawing.positions:
        lines.append(f"{x.numerator}/{x.denominator} {y.numerator}/{y.denominator}")
    if coloring is None:
        lines.extend(f"{u} {v}" for u, v in g.edges)
    else:
        lines.extend(f"{u} {v} {c}" for (u, v), c in zip(g.edges, coloring.colors))
    return "\n".join(lines) + "\n"


def serialize_vertex_colored_graph(g: Graph, coloring: VertexColoring) -> str:
    if len(coloring) != g.n:
        raise ValueError("coloring length does not match vertex count")
    lines = [f"{g.n} {g.m}"]
    lines.extend(str(c) for c in coloring.colors)
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
