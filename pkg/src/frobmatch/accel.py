"""Acceleration lane selection.

Hot scalar kernels are JIT-compiled with numba when it is importable and the
environment variable FROBMATCH_PURE_PYTHON is unset. Setting
FROBMATCH_PURE_PYTHON=1 forces the pure Python/numpy lane; results are
identical either way, only speed differs.
"""

import os

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via env flag instead
    numba = None
    HAVE_NUMBA = False

_FLAG = os.environ.get("FROBMATCH_PURE_PYTHON", "").strip().lower()
USE_NUMBA = HAVE_NUMBA and _FLAG not in ("1", "true", "yes")


def jit(func):
    """Apply numba.njit on the active lane, identity otherwise."""
    if USE_NUMBA:
        return numba.njit(cache=True)(func)
    return func


def lane_name():
    return "numba" if USE_NUMBA else "python"
