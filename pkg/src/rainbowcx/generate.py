"""Deterministic graph generators for the families used across the package.

Random families take an explicit seed and are reproducible across runs
and platforms (``random.Random`` only).
"""
from __future__ import annotations

import heapq
import random
from fractions import Fraction
from itertools import combinations

from .errors import BadParams
from .graphs import Drawing, Graph, build_graph


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise BadParams(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParams(f"complete needs n >= 1, got {n}")
    return build_graph(n, list(combinations(range(n), 2)))


def star(n: int) -> Graph:
    """Star with one center (vertex 0) and n-1 leaves."""
    if n < 2:
        raise BadParams(f"star needs n >= 2, got {n}")
    return build_graph(n, [(0, i) for i in range(1, n)])


def tree(n: int, seed: int = 0) -> Graph:
    """Uniform random labeled tree (Pruefer decoding)."""
    if n < 1:
        raise BadParams(f"tree needs n >= 1, got {n}")
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return build_graph(n, edges)


def fan(n: int) -> Graph:
    """Cycle 0..n-1 plus a hub (vertex 1) adjacent to every other vertex.

    Vertex ids follow the cycle order, so the rim path in hub-free order
    is 2, 3, ..., n-1, 0.  Edge order: the n cycle edges first, then the
    hub chords by increasing endpoint.  m = 2n - 3.
    """
    if n < 4:
        raise BadParams(f"fan needs n >= 4, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges.extend((1, v) for v in range(3, n))
    return build_graph(n, edges)


def grid3x3() -> Graph:
    """The 3x3 grid on vertices 0..8 in row-major order."""
    edges = []
    for r in range(3):
        for c in range(3):
            v = 3 * r + c
            if c < 2:
                edges.append((v, v + 1))
            if r < 2:
                edges.append((v, v + 3))
    return build_graph(9, edges)


def convex_drawing(g: Graph) -> Drawing:
    """Straight-line drawing with all vertices in convex position.

    Vertex i sits at (i, i*i) on a parabola, so no three positions are
    collinear and two edges cross exactly when their endpoints
    interleave in vertex order.
    """
    return Drawing(tuple((Fraction(i), Fraction(i * i)) for i in range(g.n)))


def permuted_convex_drawing(g: Graph, seed: int) -> Drawing:
    """Convex-position drawing with a seeded random vertex-to-slot map."""
    rng = random.Random(seed)
    slots = list(range(g.n))
    rng.shuffle(slots)
    return Drawing(
        tuple((Fraction(slots[i]), Fraction(slots[i] * slots[i])) for i in range(g.n))
    )


def _chords_cross(a: tuple[int, int], b: tuple[int, int]) -> bool:
    # Chords of the cycle 0..n-1; strict interleaving means a crossing.
    (p, q), (r, s) = sorted(a), sorted(b)
    return (p < r < q < s) or (r < p < s < q)


def random_outerplanar(n: int, seed: int = 0, chord_prob: float = 0.5) -> Graph:
    """Cycle 0..n-1 plus a random set of pairwise non-crossing chords.

    Always 2-connected (hence bridgeless) and outerplanar.
    """
    if n < 3:
        raise BadParams(f"random_outerplanar needs n >= 3, got {n}")
    rng = random.Random(seed)
    candidates = [
        (u, v)
        for u, v in combinations(range(n), 2)
        if (v - u) % n not in (1, n - 1)
    ]
    rng.shuffle(candidates)
    chords: list[tuple[int, int]] = []
    for cand in candidates:
        if rng.random() >= chord_prob:
            continue
        if all(not _chords_cross(cand, c) for c in chords):
            chords.append(cand)
    edges = [(i, (i + 1) % n) for i in range(n)] + sorted(chords)
    return build_graph(n, edges)


def _is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def _has_bridge(g: Graph) -> bool:
    for j in range(g.m):
        h = Graph(g.n, tuple(e for i, e in enumerate(g.edges) if i != j))
        if _components(h) > _components(g):
            return True
    return False


def _components(g: Graph) -> int:
    seen = [False] * g.n
    count = 0
    for s in range(g.n):
        if seen[s]:
            continue
        count += 1
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return count


def random_connected(n: int, m: int | None = None, seed: int = 0) -> Graph:
    """Uniform m-edge graph, resampled until connected."""
    if n < 1:
        raise BadParams(f"random_connected needs n >= 1, got {n}")
    max_m = n * (n - 1) // 2
    if m is None:
        m = min(max_m, max(n - 1, (3 * n) // 2))
    if not (n - 1 <= m <= max_m):
        raise BadParams(f"need n-1 <= m <= {max_m}, got m={m}")
    rng = random.Random(seed)
    all_edges = list(combinations(range(n), 2))
    while True:
        g = build_graph(n, rng.sample(all_edges, m))
        if _is_connected(g):
            return g


def random_bridgeless(n: int, m: int | None = None, seed: int = 0) -> Graph:
    """Uniform m-edge graph, resampled until connected and bridgeless."""
    if n < 3:
        raise BadParams(f"random_bridgeless needs n >= 3, got {n}")
    max_m = n * (n - 1) // 2
    if m is None:
        m = min(max_m, (3 * n) // 2)
    if not (n <= m <= max_m):
        raise BadParams(f"need n <= m <= {max_m}, got m={m}")
    rng = random.Random(seed)
    all_edges = list(combinations(range(n), 2))
    while True:
        g = build_graph(n, rng.sample(all_edges, m))
        if _is_connected(g) and not _has_bridge(g):
            return g


FAMILIES = (
    "cycle",
    "path",
    "complete",
    "star",
    "tree",
    "fan",
    "grid3x3",
    "random_outerplanar",
    "random_connected",
    "random_bridgeless",
)


def generate(family: str, n: int = 0, m: int | None = None, seed: int = 0) -> Graph:
    """Dispatch by family name (CLI surface)."""
    if family == "cycle":
        return cycle(n)
    if family == "path":
        return path(n)
    if family == "complete":
        return complete(n)
    if family == "star":
        return star(n)
    if family == "tree":
        return tree(n, seed)
    if family == "fan":
        return fan(n)
    if family == "grid3x3":
        return grid3x3()
    if family == "random_outerplanar":
        return random_outerplanar(n, seed)
    if family == "random_connected":
        return random_connected(n, m, seed)
    if family == "random_bridgeless":
        return random_bridgeless(n, m, seed)
    raise BadParams(f"unknown family {family!r} (known: {', '.join(FAMILIES)})")
