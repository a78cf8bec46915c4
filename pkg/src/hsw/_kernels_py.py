"""Numpy implementations of the determinant-heavy kernels.

These are the fallback backend: batched determinants over GF(p^k) and the
odometer scan of a matrix pencil looking for a nondegenerate point.  The
compiled core in ``hsw._core`` implements the same operations with the
same iteration order, so results are identical between backends.

Codes are expanded to coefficient vectors (..., k), which makes one pass
work for prime fields and extensions; pivot inverses come from lookup
tables (small fields) or an O(p) sieve (large primes).
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from .gfield import TABLE_LIMIT, FieldSpec

SCAN_CHUNK = 4096

_inv_cache: dict[FieldSpec, np.ndarray] = {}


def inv_table(spec: FieldSpec) -> Optional[np.ndarray]:
    """Vector of code inverses (entry 0 is 0), or None for big extensions."""
    if spec in _inv_cache:
        return _inv_cache[spec]
    if spec.k == 1:
        p = spec.p
        inv = np.zeros(p, dtype=np.int64)
        if p > 1:
            inv[1] = 1
        for i in range(2, p):
            inv[i] = (-(p // i) * inv[p % i]) % p
        _inv_cache[spec] = inv
        return inv
    if spec.q <= TABLE_LIMIT:
        inv = spec.tables()[3]
        _inv_cache[spec] = inv
        return inv
    return None


def det_batch(spec: FieldSpec, stack: np.ndarray) -> np.ndarray:
    """Determinants of a (b, n, n) stack of code matrices, as codes."""
    stack = np.asarray(stack, dtype=np.int64)
    b, n = stack.shape[0], stack.shape[1]
    if b == 0:
        return np.zeros(0, dtype=np.int64)
    if n == 0:
        return np.full(b, spec.one, dtype=np.int64)
    p, k = spec.p, spec.k
    A = spec.codes_to_coeffs(stack)
    detc = np.zeros((b, k), dtype=np.int64)
    detc[:, 0] = 1
    itab = inv_table(spec)
    for j in range(n):
        colnz = A[:, j:, j, :].any(axis=2)
        has = colnz.any(axis=1)
        detc[~has] = 0
        piv = j + np.argmax(colnz, axis=1)
        idx = np.nonzero(has & (piv != j))[0]
        if idx.size:
            tmp = A[idx, j].copy()
            A[idx, j] = A[idx, piv[idx]]
            A[idx, piv[idx]] = tmp
            detc[idx] = (-detc[idx]) % p
        pivc = A[:, j, j, :]
        detc = spec.coeff_mul(detc, pivc)
        if j + 1 < n:
            pivcodes = spec.coeffs_to_codes(pivc)
            if itab is not None:
                invcodes = itab[pivcodes]
            else:
                invcodes = np.array(
                    [spec.inv(int(c)) if c else 0 for c in pivcodes], dtype=np.int64
                )
            invc = spec.codes_to_coeffs(invcodes)
            f = spec.coeff_mul(A[:, j + 1 :, j, :], invc[:, None, :])
            A[:, j + 1 :, :, :] = (
                A[:, j + 1 :, :, :] - spec.coeff_mul(f[:, :, None, :], A[:, None, j, :, :])
            ) % p
    return spec.coeffs_to_codes(detc)


def _assemble(spec: FieldSpec, slices: np.ndarray, slices_coeff: np.ndarray,
              T: np.ndarray) -> np.ndarray:
    """Pencil evaluation at a batch of points: (count, m) codes -> (count, n, n)."""
    if spec.k == 1:
        return np.einsum("cm,mij->cij", T, slices) % spec.p
    Tc = spec.codes_to_coeffs(T)
    count, m = T.shape
    n = slices.shape[1]
    acc = np.zeros((count, n, n, spec.k), dtype=np.int64)
    for i in range(m):
        acc = (acc + spec.coeff_mul(Tc[:, i, None, None, :], slices_coeff[i])) % spec.p
    return spec.coeffs_to_codes(acc)


def scan_pencil(
    spec: FieldSpec,
    slices: np.ndarray,
    values: Sequence[int],
    start: int,
    stop: int,
    chunk: int = SCAN_CHUNK,
) -> int:
    """First odometer index in [start, stop) with nonzero pencil determinant.

    Point number P has coordinates t_i = values[(P // g**i) % g] (little
    endian, coordinate 0 fastest).  Returns -1 when every determinant in
    the range vanishes.
    """
    slices = np.asarray(slices, dtype=np.int64)
    vals = np.asarray(values, dtype=np.int64)
    m = slices.shape[0]
    g = len(vals)
    slices_coeff = spec.codes_to_coeffs(slices) if spec.k > 1 else None
    powers = g ** np.arange(m, dtype=np.int64) if m else np.zeros(0, dtype=np.int64)
    pos = start
    while pos < stop:
        count = int(min(chunk, stop - pos))
        P = pos + np.arange(count, dtype=np.int64)
        if m:
            T = vals[(P[:, None] // powers[None, :]) % g]
        else:
            T = np.zeros((count, 0), dtype=np.int64)
        G = _assemble(spec, slices, slices_coeff, T)
        dets = det_batch(spec, G)
        nz = np.nonzero(dets)[0]
        if nz.size:
            return pos + int(nz[0])
        pos += count
    return -1
