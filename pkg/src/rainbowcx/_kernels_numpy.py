"""Pure-numpy implementations of the search kernels.

Fallback backend, selected by setting ``RAINBOWCX_NO_NUMBA=1`` (or when
numba is unavailable).  Function-for-function equivalent to
:mod:`rainbowcx._kernels_numba`: same state encoding, same enumeration
order, same counterexample pair, same returned coloring.  The searches
are level-synchronized frontier expansions instead of explicit queues.
"""
import numpy as np


def _expand(indptr, deg, v):
    """Flat half-edge indices for every vertex in ``v`` (with repeats)."""
    d = deg[v]
    total = int(d.sum())
    if total == 0:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    within = np.arange(total, dtype=np.int64) - np.repeat(np.cumsum(d) - d, d)
    return np.repeat(indptr[v], d) + within, d


def edge_reach(indptr, nbr, ecol, n, p, src):
    mask_all = (np.int64(1) << p) - 1
    deg = indptr[1:] - indptr[:-1]
    visited = np.zeros(n << p, dtype=bool)
    reached = np.zeros(n, dtype=np.uint8)
    frontier = np.array([np.int64(src) << p], dtype=np.int64)
    visited[frontier] = True
    reached[src] = 1
    done = 1
    while frontier.size and done < n:
        v = frontier >> p
        mask = frontier & mask_all
        idx, d = _expand(indptr, deg, v)
        if idx.size == 0:
            break
        w = nbr[idx]
        cbit = np.int64(1) << ecol[idx]
        mrep = np.repeat(mask, d)
        keep = (mrep & cbit) == 0
        ncode = ((w << p) | (mrep | cbit))[keep]
        ncode = np.unique(ncode)
        ncode = ncode[~visited[ncode]]
        visited[ncode] = True
        reached[ncode >> p] = 1
        done = int(reached.sum())
        frontier = ncode
    return reached


def edge_verdict(indptr, nbr, ecol, n, p):
    for u in range(n - 1):
        reached = edge_reach(indptr, nbr, ecol, n, p, u)
        for v in range(u + 1, n):
            if reached[v] == 0:
                return False, u, v
    return True, -1, -1


def vertex_reach(indptr, nbr, vcol, n, p, src):
    mask_all = (np.int64(1) << p) - 1
    deg = indptr[1:] - indptr[:-1]
    visited = np.zeros(n << p, dtype=bool)
    reached = np.zeros(n, dtype=np.uint8)
    frontier = np.array([np.int64(src) << p], dtype=np.int64)
    visited[frontier] = True
    reached[src] = 1
    while frontier.size and int(reached.sum()) < n:
        v = frontier >> p
        mask = frontier & mask_all
        # A state may be expanded only if its vertex can become internal
        # (source excepted: endpoints are unconstrained).
        cbit = np.where(v == src, np.int64(0), np.int64(1) << vcol[v])
        ok = (mask & cbit) == 0
        v, mask, cbit = v[ok], mask[ok], cbit[ok]
        nmask = mask | cbit
        idx, d = _expand(indptr, deg, v)
        if idx.size == 0:
            break
        w = nbr[idx]
        ncode = (w << p) | np.repeat(nmask, d)
        ncode = np.unique(ncode)
        ncode = ncode[~visited[ncode]]
        visited[ncode] = True
        reached[ncode >> p] = 1
        frontier = ncode
    return reached


def vertex_verdict(indptr, nbr, vcol, n, p):
    for u in range(n - 1):
        reached = vertex_reach(indptr, nbr, vcol, n, p, u)
        for v in range(u + 1, n):
            if reached[v] == 0:
                return False, u, v
    return True, -1, -1


def _iter_rgs(m, k, surjective):
    """Canonical colorings in lexicographic order, matching the numba
    odometer step for step."""
    a = [0] * m
    maxc = [0] * m
    pos = 1
    while True:
        if pos == m:
            if (not surjective) or maxc[m - 1] == k - 1:
                yield a
            pos -= 1
            while pos >= 1:
                hi = min(maxc[pos - 1] + 1, k - 1)
                if a[pos] < hi:
                    a[pos] += 1
                    maxc[pos] = max(maxc[pos - 1], a[pos])
                    pos += 1
                    break
                pos -= 1
            if pos == 0:
                return
        else:
            t = 0
            if surjective:
                need = (k - 1) - (m - 1 - pos)
                if maxc[pos - 1] < need:
                    t = need
            a[pos] = t
            maxc[pos] = max(maxc[pos - 1], t)
            pos += 1


def rc_level_search(indptr, nbr, eid, n, m, k, surjective, src_order):
    explored = 0
    for a in _iter_rgs(m, k, surjective):
        explored += 1
        colors = np.array(a, dtype=np.int64)
        ecol = colors[eid]
        feasible = True
        for src in src_order:
            if int(edge_reach(indptr, nbr, ecol, n, k, src).sum()) < n:
                feasible = False
                break
        if feasible:
            return True, colors, explored
    return False, np.zeros(m, np.int64), explored


def rvc_level_search(indptr, nbr, n, k, surjective, src_order):
    explored = 0
    for a in _iter_rgs(n, k, surjective):
        explored += 1
        colors = np.array(a, dtype=np.int64)
        feasible = True
        for src in src_order:
            if int(vertex_reach(indptr, nbr, colors, n, k, src).sum()) < n:
                feasible = False
                break
        if feasible:
            return True, colors, explored
    return False, np.zeros(n, np.int64), explored
