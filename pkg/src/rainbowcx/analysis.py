"""Structural predicates and decompositions.

Everything here is exact and desk-scale: outerplanarity is decided by
exhaustive forbidden-minor search (no K4 minor, no K2,3 minor), the
Hamilton cycle of a 2-connected outerplanar graph by exhaustive search
with a uniqueness assertion, and minimum connected dominating sets by
subset enumeration in increasing size.  Brute force keeps every result
independently checkable; fast necessary filters only ever reject.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import (
    EmptyGraph,
    NoneWithinCap,
    NonUniqueHamiltonCycle,
    PreconditionViolated,
    TooLarge,
)
from .graphs import Graph


@dataclass(frozen=True)
class StructureReport:
    """Summary of the structure facts the colorings dispatch on."""

    diameter: int | float
    bridges: frozenset[int]
    cut_vertices: frozenset[int]
    is_2connected: bool
    min_degree: int


@dataclass(frozen=True)
class CdsResult:
    """A minimum connected dominating set D with its induced subgraph.

    ``vertex_map[v]`` is the id of v inside ``induced_subgraph`` (which
    relabels D to 0..size-1 in increasing order of original id).
    """

    set: tuple[int, ...]
    induced_subgraph: Graph
    size: int
    vertex_map: dict[int, int]


def bfs_distances(g: Graph, source: int) -> list[int | float]:
    dist: list[int | float] = [math.inf] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        v = q.popleft()
        for w in g.neighbors(v):
            if dist[w] == math.inf:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return all(d != math.inf for d in bfs_distances(g, 0))


def component_count(g: Graph) -> int:
    seen = [False] * g.n
    count = 0
    for s in range(g.n):
        if not seen[s]:
            count += 1
            stack = [s]
            seen[s] = True
            while stack:
                v = stack.pop()
                for w in g.neighbors(v):
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
    return count


def diameter(g: Graph) -> int | float:
    """Largest hop distance; inf when disconnected (never an error)."""
    if g.n <= 1:
        return 0
    best: int | float = 0
    for s in range(g.n):
        d = max(bfs_distances(g, s))
        if d == math.inf:
            return math.inf
        best = max(best, d)
    return best


def bridges(g: Graph) -> frozenset[int]:
    """Edges whose removal increases the component count (brute force)."""
    base = component_count(g)
    out = set()
    for j in range(g.m):
        h = Graph(g.n, tuple(e for i, e in enumerate(g.edges) if i != j))
        if component_count(h) > base:
            out.add(j)
    return frozenset(out)


def cut_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose removal increases the component count."""
    base = component_count(g)
    out = set()
    for v in range(g.n):
        keep = [u for u in range(g.n) if u != v]
        relabel = {u: i for i, u in enumerate(keep)}
        edges = tuple(
            (relabel[a], relabel[b]) for a, b in g.edges if a != v and b != v
        )
        if component_count(Graph(g.n - 1, edges)) > base:
            out.add(v)
    return frozenset(out)


def analyze(g: Graph) -> StructureReport:
    cuts = cut_vertices(g)
    return StructureReport(
        diameter=diameter(g),
        bridges=bridges(g),
        cut_vertices=cuts,
        is_2connected=g.n >= 3 and is_connected(g) and not cuts,
        min_degree=min(g.degrees) if g.n else 0,
    )


# --- outerplanarity -------------------------------------------------------

def _has_k4_subgraph(g: Graph) -> bool:
    for quad in combinations(range(g.n), 4):
        if all(g.has_edge(a, b) for a, b in combinations(quad, 2)):
            return True
    return False


def _has_k23_subgraph(g: Graph) -> bool:
    # Two vertices with three common neighbors.
    neigh = [set(g.neighbors(v)) for v in range(g.n)]
    for a, b in combinations(range(g.n), 2):
        if len(neigh[a] & neigh[b]) >= 3:
            return True
    return False


def _contract(edges: frozenset[frozenset[int]], e: frozenset[int]):
    a, b = sorted(e)
    out = set()
    for f in edges:
        if f == e:
            continue
        fa, fb = sorted(f)
        fa = a if fa == b else fa
        fb = a if fb == b else fb
        if fa != fb:
            out.add(frozenset((fa, fb)))
    return frozenset(out)


def _edgeset_graph(edges: frozenset[frozenset[int]]) -> Graph:
    verts = sorted({v for e in edges for v in e})
    relabel = {v: i for i, v in enumerate(verts)}
    return Graph(len(verts), tuple(tuple(sorted(relabel[v] for v in e)) for e in edges))


def _has_minor(edges: frozenset[frozenset[int]], which: str, memo: dict) -> bool:
    """Contraction recursion: a minor model either uses only singleton
    branch sets (then the target is a plain subgraph, the base case) or
    some branch set contains an edge whose contraction preserves the
    model.  So: subgraph found, or recurse into every single-edge
    contraction.  Deleting edges can never create minors, so no deletion
    branch is needed."""
    key = (edges, which)
    if key in memo:
        return memo[key]
    verts = {v for e in edges for v in e}
    need_v, need_e = (4, 6) if which == "k4" else (5, 6)
    if len(verts) < need_v or len(edges) < need_e:
        memo[key] = False
        return False
    g = _edgeset_graph(edges)
    found = _has_k4_subgraph(g) if which == "k4" else _has_k23_subgraph(g)
    if not found and len(verts) > need_v:
        found = any(
            _has_minor(_contract(edges, e), which, memo) for e in sorted(
                edges, key=sorted
            )
        )
    memo[key] = found
    return found


def has_minor(g: Graph, which: str) -> bool:
    """Exhaustive minor test for ``which`` in {"k4", "k23"}."""
    edges = frozenset(frozenset(e) for e in g.edges)
    return _has_minor(edges, which, {})


def _peel_rejects(g: Graph) -> bool:
    """Necessary-condition filter: repeatedly delete a vertex of degree
    at most two; a nonempty remainder of minimum degree >= 3 cannot be
    outerplanar (every simple outerplanar graph has a vertex of degree
    at most two, and outerplanarity is closed under deletion)."""
    degrees = list(g.degrees)
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    alive = set(range(g.n))
    changed = True
    while alive and changed:
        changed = False
        for v in list(alive):
            if degrees[v] <= 2:
                alive.discard(v)
                for w in adj[v]:
                    adj[w].discard(v)
                    degrees[w] -= 1
                adj[v] = set()
                changed = True
    return bool(alive)


def is_outerplanar(g: Graph, limit: int = 16) -> bool:
    """True iff g has no K4 minor and no K2,3 minor.

    Fast rejections first: m > 2n - 3, then the degree-two peel.  The
    expensive part is the exhaustive delete/contract minor search.
    """
    if g.n > limit:
        raise TooLarge(f"n={g.n} exceeds outerplanarity limit {limit}")
    if g.n <= 3:
        return True
    if g.m > 2 * g.n - 3:
        return False
    if _peel_rejects(g):
        return False
    return not has_minor(g, "k4") and not has_minor(g, "k23")


# --- Hamilton cycles ------------------------------------------------------

def hamilton_cycles(g: Graph, cap: int = 2) -> list[list[int]]:
    """All Hamilton cycles up to rotation/reflection, at most ``cap``.

    Cycles start at vertex 0 with second vertex smaller than the last to
    kill the reflection symmetry.
    """
    n = g.n
    if n < 3:
        return []
    adj = [set(g.neighbors(v)) for v in range(n)]
    found: list[list[int]] = []
    path = [0]
    used = [False] * n
    used[0] = True

    def extend() -> bool:
        if len(path) == n:
            if 0 in adj[path[-1]] and path[1] < path[-1]:
                found.append(path.copy())
                if len(found) >= cap:
                    return True
            return False
        v = path[-1]
        for w in sorted(adj[v]):
            if not used[w]:
                used[w] = True
                path.append(w)
                if extend():
                    return True
                path.pop()
                used[w] = False
        return False

    extend()
    return found


def find_hamilton_cycle(g: Graph) -> list[int] | None:
    """First Hamilton cycle in search order, or None."""
    cycles = hamilton_cycles(g, cap=1)
    return cycles[0] if cycles else None


@dataclass(frozen=True)
class HamiltonCycle:
    """The Hamilton cycle of a 2-connected outerplanar graph."""

    order: tuple[int, ...]
    cycle_edges: tuple[int, ...]
    chords: tuple[int, ...]


def outer_hamilton_cycle(g: Graph, limit: int = 16) -> HamiltonCycle:
    """The unique Hamilton cycle of a 2-connected outerplanar graph.

    Exhaustive search, with the uniqueness asserted: a second Hamilton
    cycle signals a caller bug (the precondition did not actually hold).
    The edge ids split into cycle edges and chords.
    """
    report = analyze(g)
    if not report.is_2connected or not is_outerplanar(g, limit=limit):
        raise PreconditionViolated("need a 2-connected outerplanar graph")
    cycles = hamilton_cycles(g, cap=2)
    if len(cycles) > 1:
        raise NonUniqueHamiltonCycle(f"two Hamilton cycles found: {cycles[:2]}")
    assert cycles, "a 2-connected outerplanar graph has a Hamilton cycle"
    order = cycles[0]
    on_cycle = set()
    for i in range(g.n):
        u, v = order[i], order[(i + 1) % g.n]
        on_cycle.add(g.edge_index[(min(u, v), max(u, v))])
    cycle_edges = tuple(sorted(on_cycle))
    chords = tuple(j for j in range(g.m) if j not in on_cycle)
    return HamiltonCycle(tuple(order), cycle_edges, chords)


# --- connected dominating sets -------------------------------------------

def _dominates(g: Graph, d: set[int]) -> bool:
    return all(v in d or any(w in d for w in g.neighbors(v)) for v in range(g.n))


def induced_subgraph(g: Graph, vertices: tuple[int, ...]) -> tuple[Graph, dict[int, int]]:
    relabel = {v: i for i, v in enumerate(vertices)}
    edges = tuple(
        (relabel[a], relabel[b])
        for a, b in g.edges
        if a in relabel and b in relabel
    )
    return Graph(len(vertices), edges), relabel


def min_connected_dominating_set(g: Graph, size_cap: int = 6) -> CdsResult:
    """Smallest connected dominating set, by exhaustive enumeration in
    increasing size; lexicographically first among ties."""
    if not is_connected(g) or g.n == 0:
        raise PreconditionViolated("connected dominating sets need a connected graph")
    for k in range(1, min(size_cap, g.n) + 1):
        for cand in combinations(range(g.n), k):
            dset = set(cand)
            if not _dominates(g, dset):
                continue
            sub, relabel = induced_subgraph(g, cand)
            if is_connected(sub):
                return CdsResult(cand, sub, k, relabel)
    raise NoneWithinCap(f"no connected dominating set of size <= {size_cap}")


# --- line graphs ----------------------------------------------------------

def line_graph(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Line graph: one vertex per edge, adjacent iff the edges share an
    endpoint.  The mapping edge id -> line-vertex id is the identity."""
    if g.m == 0:
        raise EmptyGraph("line graph of an edgeless graph")
    edges = []
    for i, j in combinations(range(g.m), 2):
        a, b = g.edges[i], g.edges[j]
        if set(a) & set(b):
            edges.append((i, j))
    return Graph(g.m, tuple(edges)), {i: i for i in range(g.m)}
