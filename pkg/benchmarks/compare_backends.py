"""Benchmark the numba kernels against the pure-numpy fallback.

Runs the same verdicts and solver levels through both backends and
prints a table of timings plus the speedup.  Invoke from the repo root:

    python3 benchmarks/compare_backends.py [--repeat 5]

The numpy backend is selected per-call here (not via the env flag) so
both can be timed in one process.
"""
import argparse
import time

import numpy as np

from rainbowcx import _kernels_numpy
from rainbowcx.generate import fan, random_connected
from rainbowcx.corpus import random_coloring
from rainbowcx.solver import _src_order
import random

try:
    from rainbowcx import _kernels_numba

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_verdict(repeat: int):
    rng = random.Random(11)
    g = random_connected(60, 140, seed=5)
    coloring = random_coloring(rng, g.m, 10)
    indptr, nbr, eid = g.csr
    ecol = np.array(coloring.colors, dtype=np.int64)[eid]
    p = coloring.palette_size
    args = (indptr, nbr, ecol, g.n, p)
    rows = []
    t_np = _time(lambda: _kernels_numpy.edge_verdict(*args), repeat)
    rows.append(("edge_verdict n=60 m=140 p=10", "numpy", t_np))
    if HAVE_NUMBA:
        _kernels_numba.edge_verdict(*args)  # compile outside the timer
        t_nb = _time(lambda: _kernels_numba.edge_verdict(*args), repeat)
        rows.append(("edge_verdict n=60 m=140 p=10", "numba", t_nb))
        assert _kernels_numba.edge_verdict(*args) == tuple(
            _kernels_numpy.edge_verdict(*args)
        )
    return rows


def bench_solver(repeat: int):
    # k=2 is infeasible for this fan, so the whole level is enumerated:
    # this times raw enumerate-and-verify throughput.
    g = fan(8)
    indptr, nbr, eid = g.csr
    order = _src_order(g)
    args = (indptr, nbr, eid, g.n, g.m, 2, True, order)
    rows = []
    t_np = _time(lambda: _kernels_numpy.rc_level_search(*args), repeat)
    rows.append(("rc_level fan(8) k=2 exhaust", "numpy", t_np))
    if HAVE_NUMBA:
        _kernels_numba.rc_level_search(*args)
        t_nb = _time(lambda: _kernels_numba.rc_level_search(*args), repeat)
        rows.append(("rc_level fan(8) k=2 exhaust", "numba", t_nb))
        f1, c1, e1 = _kernels_numba.rc_level_search(*args)
        f2, c2, e2 = _kernels_numpy.rc_level_search(*args)
        assert (bool(f1), int(e1)) == (bool(f2), int(e2))
        assert not f1 or (c1 == c2).all()
    return rows


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rows = bench_verdict(args.repeat) + bench_solver(args.repeat)
    print(f"{'case':<32} {'backend':<8} {'best (s)':>10}")
    by_case: dict[str, dict[str, float]] = {}
    for case, backend, t in rows:
        print(f"{case:<32} {backend:<8} {t:>10.4f}")
        by_case.setdefault(case, {})[backend] = t
    for case, d in by_case.items():
        if "numba" in d and "numpy" in d:
            print(f"{case}: numba is {d['numpy'] / d['numba']:.1f}x faster")
    if not HAVE_NUMBA:
        print("numba not available; only the numpy fallback was timed")


if __name__ == "__main__":
    main()
