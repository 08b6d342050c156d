"""Backend selection for the point-counting loops.

The compiled ``_kernels`` extension is used when it was built; otherwise the
numpy port in ``_fallback`` is used.  ``SLOPECOUNT_BACKEND=numpy`` forces the
fallback.
"""

from __future__ import annotations

import os
from functools import lru_cache
from types import ModuleType

import numpy as np

from . import _fallback
from .graphs import _subset_slots, p4_patterns
from .treepoly import as_ideal, wheel_table

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = ("cython", "numpy")


def get_backend(name: str | None = None) -> ModuleType:
    name = name or os.environ.get("SLOPECOUNT_BACKEND") or default_backend_name()
    if name == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built; run `pip install -e .`")
        return _compiled
    if name == "numpy":
        return _fallback
    raise ValueError(f"unknown backend {name!r}; choose from {BACKENDS}")


def default_backend_name() -> str:
    return "cython" if _compiled is not None else "numpy"


def available_backends() -> tuple:
    return BACKENDS if _compiled is not None else ("numpy",)


@lru_cache(maxsize=None)
def wheel_arrays(n: int, ideal):
    """(radius, cw, ccw, ks) int32 arrays for the wheels of the ideal."""
    return _pack(wheel_table(n, as_ideal(ideal)))


def _pack(table):
    kmax = max((len(r) for r, _, _ in table), default=3)
    shape = (len(table), kmax)
    radius, cw, ccw = (np.zeros(shape, dtype=np.int32) for _ in range(3))
    ks = np.zeros(len(table), dtype=np.int32)
    for w, (r, c1, c2) in enumerate(table):
        k = len(r)
        ks[w] = k
        radius[w, :k], cw[w, :k], ccw[w, :k] = r, c1, c2
    for arr in (radius, cw, ccw, ks):
        arr.setflags(write=False)
    return radius, cw, ccw, ks


def single_wheel_arrays(w, n: int):
    from .treepoly import wheel_slots

    return _pack((wheel_slots(w, n),))


@lru_cache(maxsize=None)
def p4_arrays(n: int):
    """(subsets, table): slot positions of each 4-subset and a 64-entry P4 lookup."""
    subsets = np.array(_subset_slots(n, 4), dtype=np.int32).reshape(-1, 6)
    table = np.zeros(64, dtype=np.uint8)
    table[list(p4_patterns())] = 1
    subsets.setflags(write=False)
    table.setflags(write=False)
    return subsets, table
