"""Backend selection for the elimination kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is used.  Setting ``KNOTGENUS_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _pykernel

BACKEND = "python"
_impl = _pykernel

if not os.environ.get("KNOTGENUS_PURE_PYTHON"):
    try:
        from . import _ckernel as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

poly_mul = _impl.poly_mul
poly_sub = _impl.poly_sub
poly_exact_div = _impl.poly_exact_div
poly_det = _impl.poly_det
int_det = _impl.int_det
int_rank = _impl.int_rank

__all__ = [
    "BACKEND",
    "poly_mul",
    "poly_sub",
    "poly_exact_div",
    "poly_det",
    "int_det",
    "int_rank",
]
