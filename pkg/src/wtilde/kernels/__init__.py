"""Hot numeric kernels with a numba path and a pure-numpy fallback.

The numba path is used when numba imports cleanly. Set ``WTILDE_DISABLE_NUMBA=1``
to force the numpy implementations (useful for debugging and for checking that
both paths agree).
"""
from __future__ import annotations

import os
from types import ModuleType

from . import _numpy

__all__ = [
    "BACKEND",
    "get_backend",
    "permutation_sum",
    "permanent",
    "apply_local_power",
    "election_tally",
]


def _numba_disabled() -> bool:
    return os.environ.get("WTILDE_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")


def get_backend(name: str) -> ModuleType:
    """Return the kernel module for ``name`` ("numba" or "numpy")."""
    if name == "numpy":
        return _numpy
    if name == "numba":
        from . import _numba

        return _numba
    raise ValueError(f"unknown kernel backend {name!r}")


if _numba_disabled():
    _impl = _numpy
else:
    try:
        _impl = get_backend("numba")
    except ImportError:
        _impl = _numpy

BACKEND = "numba" if _impl is not _numpy else "numpy"

permutation_sum = _impl.permutation_sum
permanent = _impl.permanent
apply_local_power = _impl.apply_local_power
election_tally = _impl.election_tally
