"""Select the integer kernel backend at import time.

The compiled ``_ckernels`` module is used when it was built; otherwise,
or when ``ABELINV_PURE`` is set to a non-empty value other than ``0``,
the pure-Python ``_pykernels`` module is used.
"""

from __future__ import annotations

import os

from . import _pykernels

_force_pure = os.environ.get("ABELINV_PURE", "") not in ("", "0")

if _force_pure:
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

convolve = _impl.convolve
quotient = _impl.quotient

__all__ = ["BACKEND", "convolve", "quotient"]
