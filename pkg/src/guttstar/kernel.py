"""Kernel backend selection: compiled extension if built, else pure Python.

Set ``GUTTSTAR_PURE=1`` to force the pure-Python kernel even when the
compiled extension is available (used by the benchmark and backend tests).
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("GUTTSTAR_PURE"):
    _impl = _kernel_py
    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernel_py
        BACKEND = "python"

PbwKernel = _impl.PbwKernel
PurePbwKernel = _kernel_py.PbwKernel


def backend_name() -> str:
    return BACKEND
