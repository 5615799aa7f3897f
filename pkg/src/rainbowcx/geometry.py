"""Exact rational plane geometry for drawings.

Everything is computed exactly; there is no epsilon anywhere.
Predicates either decide or the drawing is rejected as degenerate by
the callers.  Sign predicates run on integer-scaled copies of the
positions (denominators cleared once per drawing), which is much faster
than repeated ``Fraction`` arithmetic and provably equivalent: scaling
every point by the same positive integer preserves orientations,
collinearity and betweenness.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .errors import DegenerateDrawing
from .graphs import Drawing, Graph, Point

IntPoint = tuple[int, int]


def scaled_int_positions(positions: tuple[Point, ...]) -> list[IntPoint]:
    """Positions times the lcm of all denominators, as plain ints."""
    scale = 1
    for x, y in positions:
        scale = math.lcm(scale, x.denominator, y.denominator)
    return [(int(x * scale), int(y * scale)) for x, y in positions]


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b-a) x (c-a): +1 left, -1 right, 0 collinear."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def on_segment_interior(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies strictly between a and b on the segment ab."""
    if p == a or p == b:
        return False
    if orient(a, b, p) != 0:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def segments_properly_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Strict interior crossing of segments ab and cd."""
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def collinear_overlap(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff ab and cd are collinear and share more than one point."""
    if orient(a, b, c) != 0 or orient(a, b, d) != 0:
        return False
    # Project on the dominant axis of ab.
    axis = 0 if abs(b[0] - a[0]) >= abs(b[1] - a[1]) else 1
    lo1, hi1 = sorted((a[axis], b[axis]))
    lo2, hi2 = sorted((c[axis], d[axis]))
    return max(lo1, lo2) < min(hi1, hi2)


def crossing_point(a: Point, b: Point, c: Point, d: Point) -> Point:
    """Exact intersection point of two properly crossing segments."""
    rx, ry = b[0] - a[0], b[1] - a[1]
    sx, sy = d[0] - c[0], d[1] - c[1]
    denom = rx * sy - ry * sx
    assert denom != 0
    t = ((c[0] - a[0]) * sy - (c[1] - a[1]) * sx) / denom
    return (a[0] + t * rx, a[1] + t * ry)


def point_segment_dist_sq(p: Point, a: Point, b: Point) -> Fraction:
    """Exact squared distance from p to segment ab."""
    rx, ry = b[0] - a[0], b[1] - a[1]
    qx, qy = p[0] - a[0], p[1] - a[1]
    denom = rx * rx + ry * ry
    if denom == 0:
        return qx * qx + qy * qy
    t = (qx * rx + qy * ry) / denom
    t = min(Fraction(1), max(Fraction(0), t))
    dx, dy = qx - t * rx, qy - t * ry
    return dx * dx + dy * dy


def dist_sq(p: Point, q: Point) -> Fraction:
    dx, dy = p[0] - q[0], p[1] - q[1]
    return dx * dx + dy * dy


def validate_drawing(g: Graph, drawing: Drawing) -> None:
    """Check the drawing invariants against the graph.

    Positions must be pairwise distinct (checked on construction) and no
    vertex may lie in the interior of a non-incident edge segment.
    """
    if len(drawing) != g.n:
        raise DegenerateDrawing(
            f"drawing has {len(drawing)} positions for {g.n} vertices"
        )
    pos = scaled_int_positions(drawing.positions)
    for v in range(g.n):
        for u, w in g.edges:
            if v in (u, w):
                continue
            if on_segment_interior(pos[v], pos[u], pos[w]):
                raise DegenerateDrawing(
                    f"vertex {v} lies inside edge ({u}, {w})"
                )


def floor_sqrt_fraction_pow2(x: Fraction, min_exp: int = 2) -> Fraction:
    """Largest power of two 2^-j (j >= min_exp) whose square is <= x.

    Used to pick exact rational scale factors below a squared-distance
    bound without ever taking square roots.
    """
    assert x > 0
    j = min_exp
    while Fraction(1, 1 << (2 * j)) > x:
        j += 1
    return Fraction(1, 1 << j)
