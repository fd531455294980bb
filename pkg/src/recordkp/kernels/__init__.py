"""State-set kernels.

The compiled kernel keeps states in int64 arrays and forms bound products in
128 bits. The pure-Python kernel has the same interface and no magnitude limit.
Set ``RECORDKP_KERNEL=python`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernel

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

#: state profits and weights must stay below this for the compiled kernel
NATIVE_LIMIT = 1 << 62

_forced = os.environ.get("RECORDKP_KERNEL", "").strip().lower()
if _forced not in ("", "python", "cython"):
    raise ImportError(f"RECORDKP_KERNEL must be 'python' or 'cython', got {_forced!r}")
if _forced == "cython" and _ckernel is None:
    raise ImportError("RECORDKP_KERNEL=cython but the compiled kernel is not built")

default = _pykernel if (_forced == "python" or _ckernel is None) else _ckernel
NAME = default.NAME
HAVE_NATIVE = _ckernel is not None


def select(magnitude: int):
    """Kernel module for a solve whose state values never exceed ``magnitude``."""
    if default is _pykernel or magnitude >= NATIVE_LIMIT:
        return _pykernel
    return default


def available() -> dict:
    out = {"python": _pykernel}
    if _ckernel is not None:
        out["cython"] = _ckernel
    return out
