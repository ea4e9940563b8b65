"""Backend selection for the search kernels.

The compiled extension ``_kernels`` is used when it imports; otherwise the
pure-Python twin in ``_pykernels``.  Set ``ODDCOLOUR_PURE_PYTHON=1`` to force
the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels
from ._pykernels import EXHAUSTED, FOUND, OVER_BUDGET

python_backend = _pykernels

compiled_backend = None
if os.environ.get("ODDCOLOUR_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled_backend  # type: ignore[no-redef]
    except ImportError:  # extension not built
        compiled_backend = None

backend = compiled_backend if compiled_backend is not None else python_backend
BACKEND: str = backend.BACKEND

odd_colouring_search = backend.odd_colouring_search
odd_forest_search = backend.odd_forest_search

__all__ = [
    "BACKEND",
    "EXHAUSTED",
    "FOUND",
    "OVER_BUDGET",
    "backend",
    "compiled_backend",
    "odd_colouring_search",
    "odd_forest_search",
    "python_backend",
]
