"""Kernel backend selection.

Two interchangeable backends implement the hot search loops: numba
``@njit`` kernels (default) and a pure-numpy fallback.  Setting the
environment variable ``RAINBOWCX_NO_NUMBA=1`` before import forces the
numpy path; it is also used automatically when numba is not installed.
``benchmarks/compare_backends.py`` measures the difference.
"""
import os

_FLAG = os.environ.get("RAINBOWCX_NO_NUMBA", "").strip().lower()
_DISABLED = _FLAG in {"1", "true", "yes", "on"}

if _DISABLED:
    from . import _kernels_numpy as _impl

    BACKEND = "numpy"
else:
    try:
        from . import _kernels_numba as _impl

        BACKEND = "numba"
    except ImportError:  # pragma: no cover - exercised only without numba
        from . import _kernels_numpy as _impl

        BACKEND = "numpy"

# Dense state arrays are n * 2^palette entries; beyond this the callers
# switch to a sparse dict-based search instead of allocating.
MAX_DENSE_STATES = 1 << 28

edge_reach = _impl.edge_reach
edge_verdict = _impl.edge_verdict
vertex_reach = _impl.vertex_reach
vertex_verdict = _impl.vertex_verdict
rc_level_search = _impl.rc_level_search
rvc_level_search = _impl.rvc_level_search
