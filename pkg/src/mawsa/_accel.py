"""Kernel compilation switch.

Hot loops are written once in the numba-compatible subset of Python and
decorated with :func:`kernel`.  When numba is importable and
``MAWSA_DISABLE_NUMBA`` is unset (or ``0``), they are compiled with
``numba.njit``; otherwise they run as plain Python over numpy arrays.
The flag is read once, at import time.
"""

from __future__ import annotations

import os

_FLAG = "MAWSA_DISABLE_NUMBA"


def _numba_wanted() -> bool:
    return os.environ.get(_FLAG, "0").strip().lower() in ("", "0", "false", "no")


try:
    if not _numba_wanted():
        raise ImportError
    import numba
    from numba.experimental import jitclass as _jitclass

    USE_NUMBA = True
except ImportError:
    numba = None
    USE_NUMBA = False

BACKEND = "numba" if USE_NUMBA else "python"


def kernel(fn):
    """Compile ``fn`` in nopython mode, or return it untouched."""
    if USE_NUMBA:
        return numba.njit(cache=True, nogil=True)(fn)
    return fn


def structure(spec):
    """Class decorator: numba jitclass with ``spec``, or a plain class."""
    if USE_NUMBA:
        return _jitclass(spec)
    return lambda cls: cls

