"""Kernel selection: the compiled module when importable, else pure Python.

Set ``UNSHARP_PURE=1`` to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("UNSHARP_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "cython" if _impl is not _kernels_py else "python"

assoc_violation = _impl.assoc_violation
mono_violation = _impl.mono_violation
touching_conflict = _impl.touching_conflict
canon_smaller = _impl.canon_smaller
