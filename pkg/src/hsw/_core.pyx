# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: batched determinants and pencil scans over small fields.

Field elements are integer codes with ADD/MUL/NEG/INV lookup tables (built
by gfield.FieldSpec.tables), which covers every field of size <= 1024,
prime or not.  The iteration order matches hsw._kernels_py exactly, so the
two backends return identical results.
"""

import numpy as np


cdef long _det_tab(long[:, ::1] M, Py_ssize_t n,
                   long[:, ::1] ADD, long[:, ::1] MUL,
                   long[::1] NEG, long[::1] INV) noexcept nogil:
    cdef Py_ssize_t i, j, l, r
    cdef long d = 1
    cdef long piv, f, inv_p, v
    for j in range(n):
        r = -1
        for i in range(j, n):
            if M[i, j] != 0:
                r = i
                break
        if r < 0:
            return 0
        if r != j:
            for l in range(n):
                v = M[j, l]
                M[j, l] = M[r, l]
                M[r, l] = v
            d = NEG[d]
        piv = M[j, j]
        d = MUL[d, piv]
        inv_p = INV[piv]
        for i in range(j + 1, n):
            f = M[i, j]
            if f != 0:
                f = MUL[f, inv_p]
                for l in range(j, n):
                    M[i, l] = ADD[M[i, l], NEG[MUL[f, M[j, l]]]]
    return d


def det_batch_tab(long[:, :, ::1] stack,
                  long[:, ::1] add_t, long[:, ::1] mul_t,
                  long[::1] neg_t, long[::1] inv_t):
    """Determinant codes of a (b, n, n) stack; the stack is left untouched."""
    cdef Py_ssize_t b = stack.shape[0]
    cdef Py_ssize_t n = stack.shape[1]
    out_arr = np.empty(b, dtype=np.int64)
    work_arr = np.empty((n, n), dtype=np.int64)
    cdef long[::1] out = out_arr
    cdef long[:, ::1] W = work_arr
    cdef Py_ssize_t t, i, j
    with nogil:
        for t in range(b):
            for i in range(n):
                for j in range(n):
                    W[i, j] = stack[t, i, j]
            out[t] = _det_tab(W, n, add_t, mul_t, neg_t, inv_t)
    return out_arr


def scan_pencil_tab(long[:, :, ::1] slices, long[::1] values,
                    long[:, ::1] add_t, long[:, ::1] mul_t,
                    long[::1] neg_t, long[::1] inv_t,
                    long start, long stop):
    """First odometer index in [start, stop) with nonzero pencil determinant.

    Point P has coordinates t_i = values[(P // g**i) % g]; coordinate 0
    moves fastest.  Suffix sums of the pencil are kept so each step costs
    about one n*n refresh plus one determinant.  Returns -1 if none.
    """
    cdef Py_ssize_t m = slices.shape[0]
    cdef Py_ssize_t n = slices.shape[1]
    cdef Py_ssize_t g = values.shape[0]
    suf_arr = np.zeros((m + 1, n, n), dtype=np.int64)
    dig_arr = np.zeros(m + 1, dtype=np.int64)
    work_arr = np.empty((n, n), dtype=np.int64)
    cdef long[:, :, ::1] suf = suf_arr
    cdef long[::1] digits = dig_arr
    cdef long[:, ::1] W = work_arr
    cdef Py_ssize_t i, u, v, c
    cdef long pos = start
    cdef long rest = start
    cdef long t, d
    cdef long result = -1
    for i in range(m):
        digits[i] = rest % g
        rest //= g
    with nogil:
        for i in range(m - 1, -1, -1):
            t = values[digits[i]]
            for u in range(n):
                for v in range(n):
                    suf[i, u, v] = add_t[suf[i + 1, u, v], mul_t[t, slices[i, u, v]]]
        while pos < stop:
            for u in range(n):
                for v in range(n):
                    W[u, v] = suf[0, u, v]
            d = _det_tab(W, n, add_t, mul_t, neg_t, inv_t)
            if d != 0:
                result = pos
                break
            pos += 1
            if pos >= stop:
                break
            c = 0
            while c < m and digits[c] == g - 1:
                digits[c] = 0
                c += 1
            if c == m:
                break
            digits[c] += 1
            for i in range(c, -1, -1):
                t = values[digits[i]]
                for u in range(n):
                    for v in range(n):
                        suf[i, u, v] = add_t[suf[i + 1, u, v], mul_t[t, slices[i, u, v]]]
    return result
