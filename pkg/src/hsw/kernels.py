"""Backend selection for the determinant kernels.

The compiled core (hsw._core, built from _core.pyx) is used when it
imported successfully, the field is small enough for lookup tables, and
the environment variable HSW_PURE is unset.  Otherwise the numpy
fallback runs.  Both backends scan in the same order and agree exactly;
``benchmarks/bench_kernels.py`` compares their speed.
"""

from __future__ import annotations

import os
from typing import Sequence

import numpy as np

from . import _kernels_py
from .gfield import TABLE_LIMIT, FieldSpec

try:  # pragma: no cover - depends on build environment
    from . import _core
except ImportError:  # pragma: no cover
    _core = None

BACKEND = "numpy" if (_core is None or os.environ.get("HSW_PURE")) else "cython"


def _use_core(spec: FieldSpec) -> bool:
    return BACKEND == "cython" and spec.q <= TABLE_LIMIT


def det_batch(spec: FieldSpec, stack: np.ndarray) -> np.ndarray:
    stack = np.ascontiguousarray(stack, dtype=np.int64)
    if stack.shape[0] and stack.shape[1] and _use_core(spec):
        add_t, mul_t, neg_t, inv_t = spec.tables()
        return _core.det_batch_tab(stack, add_t, mul_t, neg_t, inv_t)
    return _kernels_py.det_batch(spec, stack)


def scan_pencil(
    spec: FieldSpec,
    slices: np.ndarray,
    values: Sequence[int],
    start: int,
    stop: int,
) -> int:
    """First odometer index in [start, stop) with det != 0, else -1."""
    slices = np.ascontiguousarray(slices, dtype=np.int64)
    vals = np.ascontiguousarray(values, dtype=np.int64)
    if stop <= start:
        return -1
    if slices.shape[0] and _use_core(spec):
        add_t, mul_t, neg_t, inv_t = spec.tables()
        return int(
            _core.scan_pencil_tab(
                slices, vals, add_t, mul_t, neg_t, inv_t, int(start), int(stop)
            )
        )
    return _kernels_py.scan_pencil(spec, slices, vals, int(start), int(stop))
