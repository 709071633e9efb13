"""Kernel selection.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``DPVA_PURE_PYTHON`` is set to a non-empty value, the
pure-Python module is used.  Both expose the same functions.
"""

from __future__ import annotations

import os

from . import _kernels_py

_impl = _kernels_py
if not os.environ.get("DPVA_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:  # extension not built
        _impl = _kernels_py

BACKEND = "compiled" if _impl is not _kernels_py else "python"

merge_pairs = _impl.merge_pairs
merge_odd = _impl.merge_odd
mul_terms = _impl.mul_terms
shift_terms = _impl.shift_terms
rref = _impl.rref
