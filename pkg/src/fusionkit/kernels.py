"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; the pure-Python
twin is the fallback.  ``FUSIONKIT_BACKEND=python`` forces the fallback and
``FUSIONKIT_BACKEND=compiled`` insists on the extension (import error if it
is not built).  Results are cached: enumeration is pure and canonical.
"""

from __future__ import annotations

import os
from functools import lru_cache

from . import _match_kernel_py

MAX_VERTICES = _match_kernel_py.MAX_VERTICES

_requested = os.environ.get("FUSIONKIT_BACKEND", "").strip().lower()

_compiled = None
if _requested not in ("py", "python", "pure"):
    try:
        from . import _match_kernel as _compiled
    except ImportError:
        _compiled = None

if _requested in ("c", "cy", "cython", "compiled") and _compiled is None:
    raise ImportError(
        f"FUSIONKIT_BACKEND={_requested!r} requested but the compiled kernel is not built"
    )

if _compiled is not None:
    BACKEND = "compiled"
    _enumerate = _compiled.enumerate_arc_sets
else:
    BACKEND = "python"
    _enumerate = _match_kernel_py.enumerate_arc_sets


def backends() -> dict:
    """Name -> raw (uncached) kernel function, for every importable backend."""
    table = {"python": _match_kernel_py.enumerate_arc_sets}
    if _compiled is not None:
        table["compiled"] = _compiled.enumerate_arc_sets
    return table


@lru_cache(maxsize=None)
def enumerate_arc_sets(sizes: tuple[int, ...]) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Cached canonical enumeration of arc sets for a tuple of box sizes."""
    return tuple(_enumerate(sizes))
