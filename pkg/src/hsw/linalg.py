"""Exact dense linear algebra over GF(p^k).

Matrices are numpy int64 arrays of field codes.  Everything is plain
Gaussian elimination with deterministic pivoting (first nonzero entry in
column order), which keeps reduced echelon forms, nullspace bases and
certificates reproducible.  Internally rows are expanded to coefficient
vectors of shape (..., k) so one code path serves prime fields and
extensions alike.

Desk-scale systems stay well under 1000 columns, so no sparse machinery
is used; the incremental :class:`Echelon` gets its speed from skipping
rows that are already reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DimensionMismatch
from .gfield import FieldSpec


def as_code_matrix(M) -> np.ndarray:
    A = np.asarray(M, dtype=np.int64)
    if A.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got shape {A.shape}")
    return A


def _scalar_coeff(spec: FieldSpec, code: int) -> np.ndarray:
    return np.array(spec.decode(code), dtype=np.int64)


def rref(spec: FieldSpec, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (R, pivot column list)."""
    A = spec.codes_to_coeffs(as_code_matrix(M))
    rows, cols = A.shape[0], A.shape[1]
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        if r == rows:
            break
        sub = A[r:, col, :]
        nz = np.nonzero(sub.any(axis=1))[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        pivcode = int(spec.coeffs_to_codes(A[r, col]))
        if pivcode != 1:
            inv = _scalar_coeff(spec, spec.inv(pivcode))
            A[r] = spec.coeff_mul(A[r], inv)
        colvals = A[:, col, :]
        mask = colvals.any(axis=1)
        mask[r] = False
        if mask.any():
            f = colvals[mask]
            prod = spec.coeff_mul(f[:, None, :], A[r][None, :, :])
            A[mask] = (A[mask] - prod) % spec.p
        pivots.append(col)
        r += 1
    return spec.coeffs_to_codes(A), pivots


def rank(spec: FieldSpec, M) -> int:
    return len(rref(spec, M)[1])


def det(spec: FieldSpec, M) -> int:
    """Determinant of a square code matrix, as a field code."""
    A0 = as_code_matrix(M)
    n, m = A0.shape
    if n != m:
        raise DimensionMismatch(f"determinant needs a square matrix, got {A0.shape}")
    if n == 0:
        return spec.one
    A = spec.codes_to_coeffs(A0)
    d = spec.one
    for j in range(n):
        sub = A[j:, j, :]
        nz = np.nonzero(sub.any(axis=1))[0]
        if nz.size == 0:
            return 0
        i = j + int(nz[0])
        if i != j:
            A[[j, i]] = A[[i, j]]
            d = spec.neg(d)
        pivcode = int(spec.coeffs_to_codes(A[j, j]))
        d = spec.mul(d, pivcode)
        if j + 1 < n:
            below = A[j + 1 :, j, :]
            mask = below.any(axis=1)
            if mask.any():
                inv = _scalar_coeff(spec, spec.inv(pivcode))
                f = spec.coeff_mul(below[mask], inv)
                prod = spec.coeff_mul(f[:, None, :], A[j][None, :, :])
                rows = np.nonzero(mask)[0] + j + 1
                A[rows] = (A[rows] - prod) % spec.p
    return d


def nullspace(spec: FieldSpec, M) -> np.ndarray:
    """Canonical nullspace basis (one row per free column of the RREF)."""
    A = as_code_matrix(M)
    cols = A.shape[1]
    R, pivots = rref(spec, A)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for bi, fc in enumerate(free):
        basis[bi, fc] = spec.one
        for ri, pc in enumerate(pivots):
            basis[bi, pc] = spec.neg(int(R[ri, fc]))
    return basis


@dataclass
class LinearSolution:
    determinant: Optional[int]
    rank: int
    solution: Optional[np.ndarray]
    nullspace: np.ndarray
    consistent: bool


def det_rank_solve(spec: FieldSpec, M, rhs=None) -> LinearSolution:
    """One-stop elimination report: det (square case), rank, solve, kernel."""
    A = as_code_matrix(M)
    nrows, ncols = A.shape
    d = det(spec, A) if nrows == ncols else None
    ns = nullspace(spec, A)
    rk = ncols - ns.shape[0]
    if rhs is None:
        return LinearSolution(d, rk, None, ns, True)
    b = np.asarray(rhs, dtype=np.int64)
    if b.ndim != 1 or b.shape[0] != nrows:
        raise DimensionMismatch(f"rhs shape {b.shape} does not match {nrows} rows")
    aug = np.concatenate([A, b[:, None]], axis=1)
    R, pivots = rref(spec, aug)
    if ncols in pivots:
        return LinearSolution(d, rk, None, ns, False)
    x = np.zeros(ncols, dtype=np.int64)
    for ri, pc in enumerate(pivots):
        x[pc] = R[ri, ncols]
    return LinearSolution(d, rk, x, ns, True)


def mat_mul(spec: FieldSpec, A, B) -> np.ndarray:
    """Exact matrix product of code matrices."""
    A = as_code_matrix(A)
    B = as_code_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    if spec.k == 1:
        return (A @ B) % spec.p
    Ac = spec.codes_to_coeffs(A)
    Bc = spec.codes_to_coeffs(B)
    acc = np.zeros((A.shape[0], B.shape[1], spec.k), dtype=np.int64)
    for l in range(A.shape[1]):
        acc = (acc + spec.coeff_mul(Ac[:, l, None, :], Bc[None, l, :, :])) % spec.p
    return spec.coeffs_to_codes(acc)


def mat_vec(spec: FieldSpec, A, v) -> np.ndarray:
    return mat_mul(spec, A, np.asarray(v, dtype=np.int64)[:, None])[:, 0]


def gram_assemble(spec: FieldSpec, slices: np.ndarray, point: Sequence[int]) -> np.ndarray:
    """Evaluate a matrix pencil sum(t_i * slice_i) at a code point."""
    slices = np.asarray(slices, dtype=np.int64)
    t = np.asarray(point, dtype=np.int64)
    if spec.k == 1:
        return np.einsum("i,iuv->uv", t, slices) % spec.p
    Sc = spec.codes_to_coeffs(slices)
    tc = spec.codes_to_coeffs(t)
    acc = spec.coeff_mul(tc[:, None, None, :], Sc).sum(axis=0) % spec.p
    return spec.coeffs_to_codes(acc)


def inverse(spec: FieldSpec, M) -> np.ndarray:
    """Inverse of a square code matrix; raises if singular."""
    A = as_code_matrix(M)
    n = A.shape[0]
    if A.shape[1] != n:
        raise DimensionMismatch("inverse needs a square matrix")
    eye = np.zeros((n, n), dtype=np.int64)
    eye[np.arange(n), np.arange(n)] = spec.one
    R, pivots = rref(spec, np.concatenate([A, eye], axis=1))
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return R[:, n:]


class Echelon:
    """Incremental echelonization; rows are inserted one at a time.

    Pivot rows are kept normalized and indexed by pivot column, so
    inserting a row touches only the pivots in its support.  Used by the
    centralizer-dimension oracle, whose constraint rows have two nonzero
    entries each.
    """

    def __init__(self, spec: FieldSpec, ncols: int):
        self.spec = spec
        self.ncols = ncols
        self.pivot_rows: dict[int, np.ndarray] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def insert(self, row) -> bool:
        """Reduce a code row against the basis; returns True if rank grew."""
        spec = self.spec
        r = spec.codes_to_coeffs(np.asarray(row, dtype=np.int64))
        while True:
            nz = np.nonzero(r.any(axis=1))[0]
            if nz.size == 0:
                return False
            c = int(nz[0])
            piv = self.pivot_rows.get(c)
            if piv is None:
                lead = int(spec.coeffs_to_codes(r[c]))
                if lead != 1:
                    r = spec.coeff_mul(r, _scalar_coeff(spec, spec.inv(lead)))
                self.pivot_rows[c] = r
                return True
            r = (r - spec.coeff_mul(r[c][None, :], piv)) % spec.p
