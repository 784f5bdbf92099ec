"""Kernel backend selection.

The Hermitian Jacobi eigensolver and the simplex pivot loop exist as a
compiled Cython extension (``eapm._core``) and as a pure-Python mirror
(``eapm._kernels_py``).  The compiled backend is used when importable;
set the environment variable ``PM_PURE_PYTHON=1`` to force the mirror.
"""

import os

import numpy as np

from eapm import _kernels_py

SIMPLEX_OPTIMAL = _kernels_py.SIMPLEX_OPTIMAL
SIMPLEX_UNBOUNDED = _kernels_py.SIMPLEX_UNBOUNDED
SIMPLEX_MAXITER = _kernels_py.SIMPLEX_MAXITER

_FORCE_PURE = os.environ.get("PM_PURE_PYTHON", "").strip() not in ("", "0")

try:
    from eapm import _core as _compiled
except ImportError:  # extension not built
    _compiled = None

_impl = _kernels_py if (_FORCE_PURE or _compiled is None) else _compiled

BACKEND = "python" if _impl is _kernels_py else "compiled"


def implementations():
    """Mapping of available backend name -> kernel module."""
    avail = {"python": _kernels_py}
    if _compiled is not None:
        avail["compiled"] = _compiled
    return avail


def eigh(a, tol=1e-12):
    """Hermitian eigendecomposition via the active backend.

    Eigenvalues come back in descending order with orthonormal
    eigenvector columns.  The input is assumed Hermitian.
    """
    arr = np.ascontiguousarray(a, dtype=np.complex128)
    return _impl.jacobi_eigh(arr, tol)


def simplex_run(tableau, basis, n_enter, pivot_tol, max_iter):
    """In-place simplex pivoting via the active backend."""
    return _impl.simplex_run(tableau, basis, n_enter, pivot_tol, max_iter)
