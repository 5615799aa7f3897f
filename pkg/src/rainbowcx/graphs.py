"""Core data model: graphs with stable edge ids, colorings, drawings.

Vertices of a graph are the integers ``0..n-1``.  Edges are kept as an
ordered sequence of unordered pairs; the position of a pair in that
sequence is the edge's stable id.  Transformations that rewrite the edge
set rely on those ids for provenance, so the order is part of the value
and survives serialization round-trips.

All values here are immutable after construction and can be shared
freely between threads.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DuplicateEdge, SelfLoop, VertexOutOfRange

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    ``edges[j]`` is stored with the smaller endpoint first; ``j`` is the
    edge id.  Construction rejects self-loops, duplicate edges (compared
    unordered) and endpoints outside ``0..n-1``.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise VertexOutOfRange(f"negative vertex count {self.n}")
        normalized = []
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise DuplicateEdge(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            normalized.append((u, v))
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex tuple of ``(neighbor, edge_id)``, in edge-id order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for j, (u, v) in enumerate(self.edges):
            adj[u].append((v, j))
            adj[v].append((u, j))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: j for j, e in enumerate(self.edges)}

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Adjacency as ``(indptr, neighbor, edge_id)`` int64 arrays.

        Each undirected edge appears twice (once per direction).  This is
        the layout consumed by the search kernels.
        """
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum(self.degrees)
        nbr = np.zeros(2 * self.m, dtype=np.int64)
        eid = np.zeros(2 * self.m, dtype=np.int64)
        pos = indptr[:-1].copy()
        for j, (u, v) in enumerate(self.edges):
            nbr[pos[u]] = v
            eid[pos[u]] = j
            pos[u] += 1
            nbr[pos[v]] = u
            eid[pos[v]] = j
            pos[v] += 1
        return indptr, nbr, eid

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_index

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(w for w, _ in self.adjacency[v])


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Construct a normalized :class:`Graph` from a raw edge list."""
    return Graph(n, tuple((u, v) for u, v in edge_list))


def vertex_pairs(n: int) -> Iterator[tuple[int, int]]:
    """Unordered vertex pairs in lexicographic order."""
    for u in range(n - 1):
        for v in range(u + 1, n):
            yield u, v


def dense_colors(colors: Sequence[int]) -> tuple[int, ...]:
    """Renumber arbitrary color ids densely, in first-occurrence order.

    Renaming colors bijectively is a symmetry of every rainbow
    question, so this never changes a verdict.  Used when ingesting
    external inputs; internally produced colorings are dense by design.
    """
    remap: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return tuple(out)


def _validate_dense(colors: Sequence[int], what: str) -> int:
    used = set(colors)
    if any(c < 0 for c in used):
        raise ValueError(f"negative {what} color")
    if used and used != set(range(len(used))):
        raise ValueError(
            f"{what} color ids must be dense 0..{len(used) - 1}, got {sorted(used)}"
        )
    return len(used)


@dataclass(frozen=True)
class EdgeColoring:
    """Total mapping from edge id to color id.

    The used ids must be exactly ``0..palette_size-1`` (dense); the
    assignment itself is stored unchanged so that transformations can
    promise specific fresh ids.  Use :func:`dense_colors` to renumber
    loose inputs first.
    """

    colors: tuple[int, ...]
    palette_size: int = field(init=False)

    def __post_init__(self) -> None:
        colors = tuple(self.colors)
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "palette_size", _validate_dense(colors, "edge"))

    def __len__(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class VertexColoring:
    """Total mapping from vertex id to color id, dense ids required."""

    colors: tuple[int, ...]
    palette_size: int = field(init=False)

    def __post_init__(self) -> None:
        colors = tuple(self.colors)
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "palette_size", _validate_dense(colors, "vertex"))

    def __len__(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class Drawing:
    """Straight-line plane embedding: one exact rational point per vertex.

    Exact coordinates keep the crossing predicate decidable; nothing in
    the package ever rounds a position.  Validity against a specific
    graph (no vertex interior to a non-incident edge) is checked by
    :func:`rainbowcx.geometry.validate_drawing`.
    """

    positions: tuple[Point, ...]

    def __post_init__(self) -> None:
        pts = tuple((Fraction(x), Fraction(y)) for x, y in self.positions)
        object.__setattr__(self, "positions", pts)
        if len(set(pts)) != len(pts):
            raise ValueError("drawing has coincident vertex positions")

    def __len__(self) -> int:
        return len(self.positions)


@dataclass(frozen=True)
class Crossing:
    """Interior intersection of two non-adjacent edge segments."""

    edge_a: int
    edge_b: int
    point: Point
