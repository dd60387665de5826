"""Eigensolver backend selection.

Prefers the compiled Jacobi kernel; falls back to the pure-python version if
the extension is missing or the ``QCLAB_PURE_EIG`` environment variable is
set to a non-empty value.
"""

import os

from . import _jacobi_py

if os.environ.get("QCLAB_PURE_EIG"):
    jacobi_eigvalsh = _jacobi_py.jacobi_eigvalsh
    BACKEND = "python"
else:
    try:
        from ._jacobi_cy import jacobi_eigvalsh

        BACKEND = "cython"
    except ImportError:
        jacobi_eigvalsh = _jacobi_py.jacobi_eigvalsh
        BACKEND = "python"
