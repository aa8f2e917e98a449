"""Backend selection for the hot kernels.

The compiled extension ``_kernels`` is used when it imports; otherwise the
pure-Python module is.  Set ``CSPEC_PURE_PYTHON=1`` to force the fallback.
"""

import os

import numpy as np

from . import _pykernels

python_backend = _pykernels
compiled_backend = None

if not os.environ.get("CSPEC_PURE_PYTHON"):
    try:
        from . import _kernels as compiled_backend
    except ImportError:
        compiled_backend = None

BACKEND = "cython" if compiled_backend is not None else "python"

_INT64_SAFE = 1 << 62


def _as_array(rows, n):
    return np.ascontiguousarray(np.array(rows, dtype=np.int64).reshape(n, n))


def canonical_order(rows, n, backend=None):
    """Order of vertices minimising the colex sequence of an integer rank matrix."""
    impl = backend or compiled_backend or python_backend
    if impl is python_backend:
        return impl.canonical_order(rows, n)
    return impl.canonical_order(_as_array(rows, n), n)


def permutation_sums(H, G, n, backend=None):
    """Distinct integer sums ``sum_{i<j} H[i][j] * G[p(i)][p(j)]`` over all permutations ``p``."""
    impl = backend or compiled_backend or python_backend
    if impl is not python_backend:
        hmax = max((abs(x) for row in H for x in row), default=0)
        gmax = max((abs(x) for row in G for x in row), default=0)
        if hmax * gmax * max(n * n, 1) >= _INT64_SAFE:
            impl = python_backend
    if impl is python_backend:
        return impl.permutation_sums(H, G, n)
    return impl.permutation_sums(_as_array(H, n), _as_array(G, n), n)
