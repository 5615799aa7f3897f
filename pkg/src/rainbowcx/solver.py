"""Exact rainbow connection and rainbow vertex-connection numbers.

Ascending-k feasibility search: for each candidate palette size k the
solver enumerates colorings in canonical form (color-renaming symmetry
broken by requiring each new color id to be introduced in ascending
order) and verifies complete assignments only.  The first feasible k is
optimal by construction; the returned coloring is the lexicographically
least feasible one, so results are independent of any execution
schedule.  No partial-assignment pruning is attempted: rainbow
connectivity is not monotone under uncoloring, and a simple kernel is
easier to audit (the canonical-enumeration shortcut is cross-checked
against unrestricted enumeration in the tests).

Search effort is reported (``nodes_explored`` counts verified complete
colorings, ``elapsed`` wall seconds) so performance regressions in the
kernels stay visible.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from . import kernels
from .analysis import bfs_distances, diameter, is_connected
from .errors import CapExceeded, PreconditionViolated, TooLarge
from .graphs import EdgeColoring, Graph, VertexColoring

DEFAULT_EDGE_LIMIT = 14
DEFAULT_VERTEX_LIMIT = 14


@dataclass(frozen=True)
class SolveResult:
    """Optimal value with a witnessing coloring and search effort.

    The coloring verifies with exactly ``value`` colors.  Sole
    exception: ``value == 0`` (complete graphs in the vertex variant,
    or graphs without vertex pairs), where the attached coloring is
    monochromatic because a total coloring cannot use zero ids.
    """

    value: int
    coloring: EdgeColoring | VertexColoring
    nodes_explored: int
    elapsed: float


def _src_order(g: Graph) -> np.ndarray:
    # Hardest sources first: failing candidates die on the first BFS.
    ecc = []
    for v in range(g.n):
        d = bfs_distances(g, v)
        ecc.append(max(x for x in d if x != math.inf) if g.n > 1 else 0)
    order = sorted(range(g.n), key=lambda v: (-ecc[v], v))
    return np.array(order, dtype=np.int64)


def rc_exact(g: Graph, k_cap: int | None = None, edge_limit: int = DEFAULT_EDGE_LIMIT) -> SolveResult:
    """Exact rainbow connection number with an optimal coloring.

    k runs from max(diam, 1) upward: the diameter is a lower bound
    (every path between a diametral pair has at least diam edges, all of
    distinct colors on a rainbow path).  At each level only colorings
    using exactly k colors are enumerated; smaller palettes were either
    rejected at earlier levels or excluded by the diameter bound.
    """
    start = time.perf_counter()
    if not is_connected(g):
        raise PreconditionViolated("rc is defined for connected graphs")
    if g.m > edge_limit:
        raise TooLarge(f"m={g.m} exceeds edge limit {edge_limit}")
    if k_cap is None:
        k_cap = max(g.m, 1)
    if g.m == 0:
        return SolveResult(0, EdgeColoring(()), 0, time.perf_counter() - start)
    d = diameter(g)
    assert d != math.inf
    indptr, nbr, eid = g.csr
    order = _src_order(g)
    explored_total = 0
    for k in range(max(int(d), 1), min(k_cap, g.m) + 1):
        found, colors, explored = kernels.rc_level_search(
            indptr, nbr, eid, g.n, g.m, k, True, order
        )
        explored_total += int(explored)
        if found:
            coloring = EdgeColoring(tuple(int(c) for c in colors))
            assert coloring.palette_size == k
            return SolveResult(k, coloring, explored_total, time.perf_counter() - start)
    raise CapExceeded(f"no rainbow coloring with at most {k_cap} colors")


def rvc_exact(g: Graph, k_cap: int | None = None, vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> SolveResult:
    """Exact rainbow vertex-connection number.

    k runs from max(diam - 1, 0); zero colors are feasible exactly when
    every pair is adjacent (no internal vertices are ever needed).
    """
    start = time.perf_counter()
    if not is_connected(g):
        raise PreconditionViolated("rvc is defined for connected graphs")
    if g.n > vertex_limit:
        raise TooLarge(f"n={g.n} exceeds vertex limit {vertex_limit}")
    if k_cap is None:
        k_cap = max(g.n, 1)
    mono = VertexColoring(tuple(0 for _ in range(g.n)))
    if g.n <= 1:
        return SolveResult(0, mono, 0, time.perf_counter() - start)
    d = diameter(g)
    assert d != math.inf
    explored_total = 0
    if d <= 1:
        return SolveResult(0, mono, 0, time.perf_counter() - start)
    indptr, nbr, _ = g.csr
    order = _src_order(g)
    for k in range(max(int(d) - 1, 1), min(k_cap, g.n) + 1):
        found, colors, explored = kernels.rvc_level_search(
            indptr, nbr, g.n, k, True, order
        )
        explored_total += int(explored)
        if found:
            coloring = VertexColoring(tuple(int(c) for c in colors))
            assert coloring.palette_size == k
            return SolveResult(k, coloring, explored_total, time.perf_counter() - start)
    raise CapExceeded(f"no vertex coloring with at most {k_cap} colors")


def rc_upper_witness(
    g: Graph, k: int, edge_limit: int = DEFAULT_EDGE_LIMIT
) -> EdgeColoring | None:
    """Some verified coloring with at most k colors, or None.

    Same canonical enumeration as :func:`rc_exact` but without the
    exactly-k restriction; the first feasible coloring in lexicographic
    order is returned.
    """
    if not is_connected(g):
        raise PreconditionViolated("rc is defined for connected graphs")
    if g.m > edge_limit:
        raise TooLarge(f"m={g.m} exceeds edge limit {edge_limit}")
    if g.m == 0:
        return EdgeColoring(())
    if k < 1:
        return None
    indptr, nbr, eid = g.csr
    order = _src_order(g)
    found, colors, _ = kernels.rc_level_search(
        indptr, nbr, eid, g.n, g.m, min(k, g.m), False, order
    )
    if not found:
        return None
    return EdgeColoring(tuple(int(c) for c in colors))
