#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Three workloads modeled on the acceptance suite's hot spots:

* batched 7x7 determinants over GF(8) (lookup-table field),
* batched 12x12 determinants over GF(3) (prime field),
* the full 8^7-point pencil exhaust that proves the degree-12 dihedral
  algebra non-symmetric at characteristic 2 (the single heaviest
  deterministic decision in the suite).

Results are checked for exact agreement before times are reported.
Run:  python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from hsw import _kernels_py, algebra, catalog, coherent
from hsw.gfield import field

try:
    from hsw import _core
except ImportError:
    _core = None


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def bench_det_batch(spec, batch, n, label):
    rng = np.random.default_rng(0)
    stack = np.ascontiguousarray(rng.integers(0, spec.q, size=(batch, n, n)))
    slow, t_py = timed(_kernels_py.det_batch, spec, stack)
    print(f"{label}: numpy {t_py:.3f}s ({batch / t_py:,.0f} dets/s)")
    if _core is not None:
        add_t, mul_t, neg_t, inv_t = spec.tables()
        fast, t_cy = timed(_core.det_batch_tab, stack, add_t, mul_t, neg_t, inv_t)
        assert np.array_equal(fast, slow)
        print(f"{label}: cython {t_cy:.3f}s ({batch / t_cy:,.0f} dets/s, "
              f"{t_py / t_cy:.1f}x)")


def bench_pencil_exhaust():
    cfg = coherent.orbitals(catalog.dihedral(12))
    A = coherent.to_algebra(cfg, 2)
    slices = algebra.pencil_slices(A, "symmetric")
    m, n = slices.shape[0], A.dim
    gspec = field(2, 3)  # needs n + 1 = 8 grid values
    values = np.arange(n + 1, dtype=np.int64)
    total = (n + 1) ** m
    label = f"pencil exhaust {total:,} points, {n}x{n} over GF(8)"
    idx_py, t_py = timed(_kernels_py.scan_pencil, gspec, slices, values, 0, total)
    print(f"{label}: numpy {t_py:.2f}s")
    if _core is not None:
        add_t, mul_t, neg_t, inv_t = gspec.tables()
        idx_cy, t_cy = timed(
            _core.scan_pencil_tab,
            np.ascontiguousarray(slices), values, add_t, mul_t, neg_t, inv_t, 0, total,
        )
        assert idx_cy == idx_py
        print(f"{label}: cython {t_cy:.2f}s ({t_py / t_cy:.1f}x)")
    print(f"  (scan result: {'no nondegenerate point' if idx_py < 0 else idx_py})")


def main():
    print(f"compiled core available: {_core is not None}")
    bench_det_batch(field(2, 3), 200_000, 7, "200k 7x7 dets over GF(8)")
    bench_det_batch(field(3, 1), 100_000, 12, "100k 12x12 dets over GF(3)")
    bench_pencil_exhaust()


if __name__ == "__main__":
    main()
