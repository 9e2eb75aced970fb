"""Kernel backend selection.

The compiled core is used when it was built; otherwise the pure Python
reference takes over. Set MODINV_PURE=1 to force the pure backend (used by
the benchmark and the backend-parity tests).
"""

import os

if os.environ.get("MODINV_PURE"):
    from modinv import _core_py as _impl
else:
    try:
        from modinv import _core_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from modinv import _core_py as _impl

rref = _impl.rref
reduce_row = _impl.reduce_row
convolve = _impl.convolve


def backend() -> str:
    """Name of the active kernel backend: 'c' or 'python'."""
    return _impl.BACKEND
