"""Numba-compiled search kernels.

Hot loops only; all contracts and fallbacks live in the calling modules.
The numpy backend (:mod:`rainbowcx._kernels_numpy`) implements the same
functions with identical semantics, including enumeration order and
counterexample choice, so the two are interchangeable.

State encoding for the rainbow searches: an int64 ``(v << p) | mask``
where ``mask`` is the bitmask of used colors and ``p`` the palette bit
width.  Dense stamped arrays replace per-query clearing.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def _grow(queue):
    bigger = np.empty(queue.shape[0] * 2, np.int64)
    bigger[: queue.shape[0]] = queue
    return bigger


@njit(cache=True)
def _edge_reach_stamped(indptr, nbr, ecol, n, p, src, visited, stamp):
    mask_all = (np.int64(1) << p) - 1
    reached = np.zeros(n, np.uint8)
    queue = np.empty(1024, np.int64)
    code = np.int64(src) << p
    visited[code] = stamp
    queue[0] = code
    head, tail = 0, 1
    reached[src] = 1
    count = 1
    while head < tail and count < n:
        code = queue[head]
        head += 1
        v = code >> p
        mask = code & mask_all
        for idx in range(indptr[v], indptr[v + 1]):
            cbit = np.int64(1) << ecol[idx]
            if mask & cbit:
                continue
            w = nbr[idx]
            ncode = (w << p) | (mask | cbit)
            if visited[ncode] != stamp:
                visited[ncode] = stamp
                if tail == queue.shape[0]:
                    queue = _grow(queue)
                queue[tail] = ncode
                tail += 1
                if reached[w] == 0:
                    reached[w] = 1
                    count += 1
    return reached


@njit(cache=True)
def edge_reach(indptr, nbr, ecol, n, p, src):
    """Vertices reachable from src along paths with pairwise-distinct
    edge colors."""
    visited = np.zeros(n << p, np.int8)
    return _edge_reach_stamped(indptr, nbr, ecol, n, p, src, visited, 1)


@njit(cache=True)
def edge_verdict(indptr, nbr, ecol, n, p):
    """All-pairs rainbow connectivity; on failure returns the
    lexicographically first disconnected pair."""
    visited = np.zeros(n << p, np.int8)
    for u in range(n - 1):
        reached = _edge_reach_stamped(indptr, nbr, ecol, n, p, u, visited, u + 1)
        for v in range(u + 1, n):
            if reached[v] == 0:
                return False, u, v
    return True, -1, -1


@njit(cache=True)
def _vertex_reach_stamped(indptr, nbr, vcol, n, p, src, visited, stamp):
    mask_all = (np.int64(1) << p) - 1
    reached = np.zeros(n, np.uint8)
    queue = np.empty(1024, np.int64)
    code = np.int64(src) << p
    visited[code] = stamp
    queue[0] = code
    head, tail = 0, 1
    reached[src] = 1
    count = 1
    while head < tail and count < n:
        code = queue[head]
        head += 1
        v = code >> p
        mask = code & mask_all
        if v == src:
            nmask = mask
        else:
            cbit = np.int64(1) << vcol[v]
            if mask & cbit:
                continue
            nmask = mask | cbit
        for idx in range(indptr[v], indptr[v + 1]):
            w = nbr[idx]
            ncode = (w << p) | nmask
            if visited[ncode] != stamp:
                visited[ncode] = stamp
                if tail == queue.shape[0]:
                    queue = _grow(queue)
                queue[tail] = ncode
                tail += 1
                if reached[w] == 0:
                    reached[w] = 1
                    count += 1
    return reached


@njit(cache=True)
def vertex_reach(indptr, nbr, vcol, n, p, src):
    visited = np.zeros(n << p, np.int8)
    return _vertex_reach_stamped(indptr, nbr, vcol, n, p, src, visited, 1)


@njit(cache=True)
def vertex_verdict(indptr, nbr, vcol, n, p):
    visited = np.zeros(n << p, np.int8)
    for u in range(n - 1):
        reached = _vertex_reach_stamped(indptr, nbr, vcol, n, p, u, visited, u + 1)
        for v in range(u + 1, n):
            if reached[v] == 0:
                return False, u, v
    return True, -1, -1


@njit(cache=True)
def _rc_feasible(indptr, nbr, eid, a, n, k, src_order, visited, queue, reached, base):
    mask_all = (np.int64(1) << k) - 1
    for i in range(n):
        src = src_order[i]
        stamp = base + i + 1
        code = np.int64(src) << k
        visited[code] = stamp
        queue[0] = code
        head, tail = 0, 1
        reached[src] = stamp
        count = 1
        while head < tail and count < n:
            code = queue[head]
            head += 1
            v = code >> k
            mask = code & mask_all
            for idx in range(indptr[v], indptr[v + 1]):
                cbit = np.int64(1) << a[eid[idx]]
                if mask & cbit:
                    continue
                w = nbr[idx]
                ncode = (w << k) | (mask | cbit)
                if visited[ncode] != stamp:
                    visited[ncode] = stamp
                    queue[tail] = ncode
                    tail += 1
                    if reached[w] != stamp:
                        reached[w] = stamp
                        count += 1
        if count < n:
            return False
    return True


@njit(cache=True)
def _vrc_feasible(indptr, nbr, a, n, k, src_order, visited, queue, reached, base):
    mask_all = (np.int64(1) << k) - 1
    for i in range(n):
        src = src_order[i]
        stamp = base + i + 1
        code = np.int64(src) << k
        visited[code] = stamp
        queue[0] = code
        head, tail = 0, 1
        reached[src] = stamp
        count = 1
        while head < tail and count < n:
            code = queue[head]
            head += 1
            v = code >> k
            mask = code & mask_all
            if v == src:
                nmask = mask
            else:
                cbit = np.int64(1) << a[v]
                if mask & cbit:
                    continue
                nmask = mask | cbit
            for idx in range(indptr[v], indptr[v + 1]):
                w = nbr[idx]
                ncode = (w << k) | nmask
                if visited[ncode] != stamp:
                    visited[ncode] = stamp
                    queue[tail] = ncode
                    tail += 1
                    if reached[w] != stamp:
                        reached[w] = stamp
                        count += 1
        if count < n:
            return False
    return True


@njit(cache=True)
def rc_level_search(indptr, nbr, eid, n, m, k, surjective, src_order):
    """First canonically-enumerated feasible edge coloring at level k.

    Canonical form: edge 0 gets color 0 and edge j may use at most one
    more than the largest color used before it.  ``surjective`` restricts
    to colorings using exactly k colors (skipped values cannot contain a
    candidate, so lexicographic order is preserved).  Verification runs
    on complete assignments only.  Returns (found, coloring, explored).
    """
    a = np.zeros(m, np.int64)
    maxc = np.zeros(m, np.int64)
    visited = np.zeros(n << k, np.int64)
    queue = np.empty(n << k, np.int64)
    reached = np.zeros(n, np.int64)
    explored = np.int64(0)
    pos = 1
    while True:
        if pos == m:
            if (not surjective) or maxc[m - 1] == k - 1:
                explored += 1
                if _rc_feasible(
                    indptr, nbr, eid, a, n, k, src_order,
                    visited, queue, reached, explored * n,
                ):
                    return True, a.copy(), explored
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
                return False, a, explored
        else:
            t = np.int64(0)
            if surjective:
                need = (k - 1) - (m - 1 - pos)
                if maxc[pos - 1] < need:
                    t = need
            a[pos] = t
            maxc[pos] = max(maxc[pos - 1], t)
            pos += 1


@njit(cache=True)
def rvc_level_search(indptr, nbr, n, k, surjective, src_order):
    """Vertex-coloring analogue of :func:`rc_level_search`."""
    a = np.zeros(n, np.int64)
    maxc = np.zeros(n, np.int64)
    visited = np.zeros(n << k, np.int64)
    queue = np.empty(n << k, np.int64)
    reached = np.zeros(n, np.int64)
    explored = np.int64(0)
    pos = 1
    while True:
        if pos == n:
            if (not surjective) or maxc[n - 1] == k - 1:
                explored += 1
                if _vrc_feasible(
                    indptr, nbr, a, n, k, src_order,
                    visited, queue, reached, explored * n,
                ):
                    return True, a.copy(), explored
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
                return False, a, explored
        else:
            t = np.int64(0)
            if surjective:
                need = (k - 1) - (n - 1 - pos)
                if maxc[pos - 1] < need:
                    t = need
            a[pos] = t
            maxc[pos] = max(maxc[pos - 1], t)
            pos += 1
