"""Kernel dispatch: compiled int64 core when importable, pure Python otherwise.

Set ``LORENTZ_HOMOG_PURE=1`` to force the pure-Python path (results are
identical; only speed differs).
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    if os.environ.get("LORENTZ_HOMOG_PURE"):
        raise ImportError("pure-Python kernels requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"


def gauss_jordan(rows, ncols):
    if _compiled is not None:
        try:
            return _compiled.gauss_jordan(rows, ncols)
        except OverflowError:
            pass
    return _kernels_py.gauss_jordan(rows, ncols)


def matmul(a, b):
    if _compiled is not None and a and b:
        try:
            return _compiled.matmul(a, b)
        except OverflowError:
            pass
    return _kernels_py.matmul(a, b)
