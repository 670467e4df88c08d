"""Kernel backend selection: compiled extension when available, pure Python otherwise.

Set NORMALWORDS_PURE=1 in the environment to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("NORMALWORDS_PURE"):
    from normalwords import _pykernels as _backend

    BACKEND = "pure-python"
else:
    try:
        from normalwords import _fastkernels as _backend  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from normalwords import _pykernels as _backend  # type: ignore[no-redef]

        BACKEND = "pure-python"

count_blocks = _backend.count_blocks
sliding_counts = _backend.sliding_counts
dense_extremes = _backend.dense_extremes
fill_blocks = _backend.fill_blocks


def backend() -> str:
    """Name of the active kernel backend."""
    return BACKEND
