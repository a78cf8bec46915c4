"""Finite-dimensional algebras by structure constants, and the exact
decision procedures for "symmetric" and "Frobenius" over a fixed prime
characteristic.

A bilinear form f on a unital algebra A is associative iff f(a, b) =
L(ab) for the functional L = f(., 1); it is then symmetric iff L kills
every commutator.  So the two decisions reduce to one question about a
matrix pencil G(t) = sum_i t_i * G_i with G_i[u, v] = L_i(b_u * b_v):

* Frobenius: L_1..L_m is the full dual basis (m = dim A);
* symmetric: L_1..L_m is a basis of the annihilator of span{ab - ba}.

The algebra admits the form over the algebraic closure iff det G(t) is a
nonzero polynomial.  Symmetric and Frobenius transfer along arbitrary
field extensions in both directions (a Noether-Deuring style descent of
the A-bimodule isomorphism A = Hom(A, K); this justification is standard
algebra and not a claim of the underlying combinatorics), so deciding
over the closure decides over every field of the characteristic at once.

det G(t) has degree at most n in each variable, hence it vanishes
identically iff it vanishes on a grid of (n+1)^m points with n+1 distinct
coordinates per variable.  Deterministic mode scans that grid (moving to
the smallest field extension with n+1 elements when needed) and is exact
in both directions; randomized mode samples points in a large extension
and is exact on success, probabilistic on failure, with the
Schwartz-Zippel bound reported.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dfield
from typing import Optional, Sequence, Union

import numpy as np

from . import kernels, linalg
from .errors import (
    BadUnit,
    FieldMismatch,
    ModeInfeasible,
    NotAssociative,
    SearchSpaceTooLarge,
)
from .gfield import FieldSpec, embed_codes, field, min_extension

DET_BUDGET = 10_000_000
RANDOM_FIELD_MIN = 2 ** 20
DEFAULT_TRIALS = 64


# ------------------------------------------------------------------
# the algebra container
# ------------------------------------------------------------------

class FinDimAlgebra:
    """A unital associative algebra over GF(p^k) given by a basis.

    ``constants[i, j, l]`` is the coefficient of b_l in b_i * b_j (field
    codes); ``unit`` is the coordinate vector of 1.  Associativity and
    the unit law are verified at construction.
    """

    def __init__(self, spec: FieldSpec, constants, unit, labels=None, check=True):
        C = np.asarray(constants, dtype=np.int64)
        if C.ndim != 3 or C.shape[0] != C.shape[1] or C.shape[1] != C.shape[2]:
            raise ValueError(f"structure tensor must be cubic, got {C.shape}")
        n = C.shape[0]
        u = np.asarray(unit, dtype=np.int64)
        if u.shape != (n,):
            raise BadUnit(f"unit vector has shape {u.shape}, expected ({n},)")
        self.spec = spec
        self.dim = n
        self.constants = C
        self.unit = u
        self.labels = tuple(labels) if labels else tuple(f"b{i}" for i in range(n))
        if len(self.labels) != n:
            raise ValueError("label count does not match dimension")
        if check:
            self._check_axioms()

    # -- internal tensor contractions, prime fast path ----------------

    def _double_product(self) -> tuple[np.ndarray, np.ndarray]:
        """((b_i b_j) b_l, b_i (b_j b_l)) as (n,n,n,n) coordinate tensors."""
        C, spec = self.constants, self.spec
        if spec.k == 1:
            left = np.einsum("ijm,mld->ijld", C, C) % spec.p
            right = np.einsum("jlm,imd->ijld", C, C) % spec.p
            return left, right
        n, k = self.dim, spec.k
        Cc = spec.codes_to_coeffs(C)
        left = np.zeros((n, n, n, n, k), dtype=np.int64)
        right = np.zeros((n, n, n, n, k), dtype=np.int64)
        for m in range(n):
            left += spec.coeff_mul(Cc[:, :, m][:, :, None, None, :], Cc[m][None, None, :, :, :])
            right += spec.coeff_mul(Cc[:, :, m][None, :, :, None, :], Cc[:, m, :][:, None, None, :, :])
            left %= spec.p
            right %= spec.p
        return spec.coeffs_to_codes(left), spec.coeffs_to_codes(right)

    def _check_axioms(self) -> None:
        spec = self.spec
        left, right = self._double_product()
        if not np.array_equal(left, right):
            bad = np.argwhere(left != right)[0]
            raise NotAssociative(
                f"associativity fails at basis triple {tuple(int(x) for x in bad[:3])}"
            )
        eye = np.zeros((self.dim, self.dim), dtype=np.int64)
        eye[np.arange(self.dim), np.arange(self.dim)] = spec.one
        lu = self._vec_mul_tensor(self.unit, left_side=True)
        ru = self._vec_mul_tensor(self.unit, left_side=False)
        if not (np.array_equal(lu, eye) and np.array_equal(ru, eye)):
            raise BadUnit("unit vector does not act as identity")

    def _vec_mul_tensor(self, v: np.ndarray, left_side: bool) -> np.ndarray:
        """Matrix of multiplication by the element with coordinates v."""
        C, spec = self.constants, self.spec
        sub = "i,ijd->jd" if left_side else "j,ijd->id"
        if spec.k == 1:
            return np.einsum(sub, v, C) % spec.p
        Cc = spec.codes_to_coeffs(C)
        vc = spec.codes_to_coeffs(np.asarray(v, dtype=np.int64))
        if left_side:
            acc = spec.coeff_mul(vc[:, None, None, :], Cc).sum(axis=0) % spec.p
        else:
            acc = spec.coeff_mul(vc[None, :, None, :], Cc).sum(axis=1) % spec.p
        return spec.coeffs_to_codes(acc)

    # -- public element arithmetic ------------------------------------

    def multiply(self, x, y) -> np.ndarray:
        """Product of two coordinate vectors."""
        mx = self._vec_mul_tensor(np.asarray(x, dtype=np.int64), left_side=True)
        return linalg.mat_vec(self.spec, mx.T, np.asarray(y, dtype=np.int64))

    def basis_vector(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = self.spec.one
        return v

    def is_commutative(self) -> bool:
        return np.array_equal(self.constants, self.constants.transpose(1, 0, 2))

    def __repr__(self) -> str:
        return f"<FinDimAlgebra dim={self.dim} over {self.spec!r}>"


def from_integer_constants(constants, unit, p: int, k: int = 1, labels=None) -> FinDimAlgebra:
    """Reduce an integer structure tensor mod p (into the prime subfield)."""
    C = np.asarray(constants, dtype=np.int64) % p
    u = np.asarray(unit, dtype=np.int64) % p
    return FinDimAlgebra(field(p, k), C, u, labels=labels)


# ------------------------------------------------------------------
# pencils
# ------------------------------------------------------------------

def commutator_space(A: FinDimAlgebra) -> np.ndarray:
    """RREF basis of span{b_i b_j - b_j b_i} inside A (code rows)."""
    spec = A.spec
    C = A.constants
    diff = spec.codes_to_coeffs(C) - spec.codes_to_coeffs(C.transpose(1, 0, 2))
    rows = spec.coeffs_to_codes(diff % spec.p).reshape(-1, A.dim)
    R, pivots = linalg.rref(spec, rows)
    return R[: len(pivots)]


def central_functionals(A: FinDimAlgebra) -> np.ndarray:
    """Canonical basis of the functionals vanishing on all commutators."""
    comm = commutator_space(A)
    if comm.shape[0] == 0:
        eye = np.zeros((A.dim, A.dim), dtype=np.int64)
        eye[np.arange(A.dim), np.arange(A.dim)] = A.spec.one
        return eye
    return linalg.nullspace(A.spec, comm)


def pencil_slices(A: FinDimAlgebra, kind: str) -> np.ndarray:
    """Gram matrices G_i[u, v] = L_i(b_u b_v) for the chosen functional basis."""
    spec, C = A.spec, A.constants
    if kind == "frobenius":
        return np.ascontiguousarray(C.transpose(2, 0, 1))
    if kind != "symmetric":
        raise ValueError(f"unknown pencil kind {kind!r}")
    L = central_functionals(A)
    if spec.k == 1:
        return np.einsum("ld,uvd->luv", L, C) % spec.p
    Lc = spec.codes_to_coeffs(L)
    Cc = spec.codes_to_coeffs(C)
    m = L.shape[0]
    acc = np.zeros((m, A.dim, A.dim, spec.k), dtype=np.int64)
    for w in range(A.dim):
        acc = (acc + spec.coeff_mul(Lc[:, w, None, None, :], Cc[None, :, :, w, :])) % spec.p
    return spec.coeffs_to_codes(acc)


# ------------------------------------------------------------------
# decision modes and verdicts
# ------------------------------------------------------------------

@dataclass(frozen=True)
class Deterministic:
    budget: int = DET_BUDGET


@dataclass(frozen=True)
class Randomized:
    seed: int
    trials: int = DEFAULT_TRIALS


Mode = Union[Deterministic, Randomized]


@dataclass(frozen=True)
class Certificate:
    """An explicit nondegenerate point: re-checkable without trusting us."""

    field: tuple[int, int]
    point: tuple[int, ...]
    det: int


@dataclass
class FormVerdict:
    kind: str                     # "symmetric" | "frobenius"
    exists: bool
    mode: str                     # "deterministic" | "randomized"
    exact: bool                   # False only for randomized negatives
    pencil_dim: int
    algebra_dim: int
    base_field: tuple[int, int]
    grid_field: tuple[int, int]
    certificate: Optional[Certificate] = None
    trials: int = 0
    error_bound: Optional[float] = None
    evaluations: int = 0

    def __bool__(self) -> bool:
        return self.exists

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "exists": self.exists,
            "mode": self.mode,
            "exact": self.exact,
            "pencil_dim": self.pencil_dim,
            "algebra_dim": self.algebra_dim,
            "base_field": list(self.base_field),
            "grid_field": list(self.grid_field),
            "evaluations": self.evaluations,
        }
        if self.certificate is not None:
            out["certificate"] = {
                "field": list(self.certificate.field),
                "point": list(self.certificate.point),
                "det": self.certificate.det,
            }
        if self.mode == "randomized":
            out["trials"] = self.trials
            if self.error_bound is not None:
                out["error_bound"] = self.error_bound
        return out


def _grid_spec_and_slices(A: FinDimAlgebra, slices: np.ndarray, size_needed: int):
    """Extend the base field until it has size_needed elements; map codes."""
    base = A.spec
    if base.q >= size_needed:
        return base, slices
    target = min_extension(base.p, size_needed, multiple_of=base.k)
    emb = embed_codes(base, target)
    return target, emb[slices]


def _point_from_index(index: int, g: int, m: int, values: np.ndarray) -> tuple[int, ...]:
    digs = []
    rest = index
    for _ in range(m):
        digs.append(int(values[rest % g]))
        rest //= g
    return tuple(digs)


def _decide_pencil(A: FinDimAlgebra, kind: str, mode: Mode) -> FormVerdict:
    slices = pencil_slices(A, kind)
    m, n = slices.shape[0], A.dim
    base = (A.spec.p, A.spec.k)
    if m == 0:
        return FormVerdict(kind, False, "deterministic", True, 0, n, base, base)
    if isinstance(mode, Deterministic):
        g = n + 1
        total = g ** m
        if total > mode.budget:
            raise ModeInfeasible(
                f"deterministic grid has {total} points, over budget {mode.budget}"
            )
        gspec, gslices = _grid_spec_and_slices(A, slices, g)
        values = np.arange(g, dtype=np.int64)
        idx = kernels.scan_pencil(gspec, gslices, values, 0, total)
        if idx < 0:
            return FormVerdict(
                kind, False, "deterministic", True, m, n, base,
                (gspec.p, gspec.k), evaluations=total,
            )
        point = _point_from_index(idx, g, m, values)
        detcode = int(linalg.det(gspec, linalg.gram_assemble(gspec, gslices, point)))
        cert = Certificate((gspec.p, gspec.k), point, detcode)
        return FormVerdict(
            kind, True, "deterministic", True, m, n, base,
            (gspec.p, gspec.k), certificate=cert, evaluations=idx + 1,
        )
    # randomized mode over a large extension
    gspec, gslices = _grid_spec_and_slices(A, slices, RANDOM_FIELD_MIN)
    rng = random.Random(mode.seed)
    for trial in range(mode.trials):
        point = tuple(rng.randrange(gspec.q) for _ in range(m))
        G = linalg.gram_assemble(gspec, gslices, point)
        detcode = int(linalg.det(gspec, G))
        if detcode != 0:
            cert = Certificate((gspec.p, gspec.k), point, detcode)
            return FormVerdict(
                kind, True, "randomized", True, m, n, base, (gspec.p, gspec.k),
                certificate=cert, trials=trial + 1, evaluations=trial + 1,
            )
    bound = (n / gspec.q) ** mode.trials
    return FormVerdict(
        kind, False, "randomized", False, m, n, base, (gspec.p, gspec.k),
        trials=mode.trials, error_bound=bound, evaluations=mode.trials,
    )


def is_symmetric(A: FinDimAlgebra, mode: Mode = Deterministic()) -> FormVerdict:
    """Does A (over the closure of its base field) admit a nondegenerate
    symmetric associative bilinear form?  See the module docstring for the
    exactness guarantees per mode."""
    return _decide_pencil(A, "symmetric", mode)


def is_frobenius(A: FinDimAlgebra, mode: Mode = Deterministic()) -> FormVerdict:
    """Same decision for a nondegenerate associative form, symmetry dropped."""
    return _decide_pencil(A, "frobenius", mode)


def decide(A: FinDimAlgebra, kind: str, seed: int = 0,
           budget: int = DET_BUDGET, trials: int = DEFAULT_TRIALS) -> FormVerdict:
    """Deterministic when the grid fits the budget, else randomized(seed).

    Positive verdicts are exact in either mode (they carry a certificate);
    only a randomized negative is probabilistic, with its bound reported.
    """
    try:
        return _decide_pencil(A, kind, Deterministic(budget))
    except ModeInfeasible:
        return _decide_pencil(A, kind, Randomized(seed, trials))


def verify_certificate(A: FinDimAlgebra, kind: str, cert: Certificate) -> bool:
    """Recompute det G(t*) from scratch in the certificate's field."""
    slices = pencil_slices(A, kind)
    if len(cert.point) != slices.shape[0]:
        return False
    p, k = cert.field
    gspec = field(p, k)
    if (p, k) == (A.spec.p, A.spec.k):
        gslices = slices
    else:
        gslices = embed_codes(A.spec, gspec)[slices]
    G = linalg.gram_assemble(gspec, gslices, cert.point)
    return int(linalg.det(gspec, G)) == cert.det != 0


# ------------------------------------------------------------------
# exhaustive oracle over the prime field itself
# ------------------------------------------------------------------

@dataclass
class BruteForceResult:
    found: bool
    point: Optional[tuple[int, ...]]
    searched: int
    pencil_dim: int

    def __bool__(self) -> bool:
        return self.found


def _bf_det_batch(stack: np.ndarray, p: int, inv: np.ndarray) -> np.ndarray:
    """Self-contained batched determinant mod p, independent of hsw.kernels.

    Reverses both axes first, so the elimination runs bottom-right to
    top-left; reversing rows and columns together leaves det unchanged.
    """
    A = stack[:, ::-1, ::-1].copy() % p
    b, n = A.shape[0], A.shape[1]
    dets = np.ones(b, dtype=np.int64)
    for j in range(n):
        col = A[:, j:, j]
        nzmask = col != 0
        has = nzmask.any(axis=1)
        dets[~has] = 0
        pick = j + np.argmax(nzmask, axis=1)
        rows = np.nonzero(has & (pick != j))[0]
        if rows.size:
            tmp = A[rows, j].copy()
            A[rows, j] = A[rows, pick[rows]]
            A[rows, pick[rows]] = tmp
            dets[rows] = p - dets[rows]
        pivots = A[:, j, j]
        dets = (dets * pivots) % p
        if j + 1 < n:
            factors = (A[:, j + 1 :, j] * inv[pivots][:, None]) % p
            A[:, j + 1 :, :] = (A[:, j + 1 :, :] - factors[:, :, None] * A[:, None, j, :]) % p
    return dets


def brute_force_form_search(A: FinDimAlgebra, symmetric_only: bool,
                            cap: int = 10 ** 6) -> BruteForceResult:
    """Try every functional-coefficient vector over F_p itself.

    Exhaustive search over F_p^m for the pencil of the requested kind;
    cross-validates the pencil decisions on small instances.  Note the
    decisions quantify over the closure, so agreement on fixtures is
    asserted in tests rather than assumed in code.
    """
    spec = A.spec
    if spec.k != 1:
        raise ValueError("brute force search is defined over prime fields only")
    p = spec.p
    slices = pencil_slices(A, "symmetric" if symmetric_only else "frobenius")
    m, n = slices.shape[0], A.dim
    total = p ** m
    if total > cap:
        raise SearchSpaceTooLarge(f"p^m = {total} exceeds cap {cap}")
    inv = np.zeros(p, dtype=np.int64)
    if p > 1:
        inv[1] = 1
    for i in range(2, p):
        inv[i] = (-(p // i) * inv[p % i]) % p
    chunk = 8192
    pows = p ** np.arange(m, dtype=np.int64) if m else np.zeros(0, dtype=np.int64)
    pos = 0
    while pos < total:
        count = int(min(chunk, total - pos))
        P = pos + np.arange(count, dtype=np.int64)
        T = (P[:, None] // pows[None, :]) % p if m else np.zeros((count, 0), np.int64)
        G = np.einsum("cm,mij->cij", T, slices) % p
        dets = _bf_det_batch(G, p, inv)
        nz = np.nonzero(dets)[0]
        if nz.size:
            t = tuple(int(x) for x in T[nz[0]])
            return BruteForceResult(True, t, pos + int(nz[0]) + 1, m)
        pos += count
    return BruteForceResult(False, None, total, m)


# ------------------------------------------------------------------
# constructions
# ------------------------------------------------------------------

def direct_sum(A: FinDimAlgebra, B: FinDimAlgebra) -> FinDimAlgebra:
    if A.spec != B.spec:
        raise FieldMismatch("direct sum needs a common base field")
    na, nb = A.dim, B.dim
    n = na + nb
    C = np.zeros((n, n, n), dtype=np.int64)
    C[:na, :na, :na] = A.constants
    C[na:, na:, na:] = B.constants
    unit = np.concatenate([A.unit, B.unit])
    labels = tuple(f"l.{s}" for s in A.labels) + tuple(f"r.{s}" for s in B.labels)
    return FinDimAlgebra(A.spec, C, unit, labels=labels)


def tensor_product(A: FinDimAlgebra, B: FinDimAlgebra) -> FinDimAlgebra:
    if A.spec != B.spec:
        raise FieldMismatch("tensor product needs a common base field")
    spec = A.spec
    na, nb = A.dim, B.dim
    n = na * nb
    if spec.k == 1:
        C = (np.einsum("ijl,abc->iajblc", A.constants, B.constants) % spec.p).reshape(n, n, n)
        unit = (np.einsum("i,a->ia", A.unit, B.unit) % spec.p).reshape(n)
    else:
        Ac = spec.codes_to_coeffs(A.constants)
        Bc = spec.codes_to_coeffs(B.constants)
        prod = spec.coeff_mul(
            Ac[:, None, :, None, :, None, :], Bc[None, :, None, :, None, :, :]
        )
        C = spec.coeffs_to_codes(prod).reshape(n, n, n)
        uprod = spec.coeff_mul(
            spec.codes_to_coeffs(A.unit)[:, None, :],
            spec.codes_to_coeffs(B.unit)[None, :, :],
        )
        unit = spec.coeffs_to_codes(uprod).reshape(n)
    labels = tuple(f"{a}*{b}" for a in A.labels for b in B.labels)
    return FinDimAlgebra(spec, C, unit, labels=labels)


def change_of_basis(A: FinDimAlgebra, S) -> FinDimAlgebra:
    """Rewrite A in the basis whose rows (old coordinates) are S."""
    spec = A.spec
    S = linalg.as_code_matrix(S)
    Sinv = linalg.inverse(spec, S)
    if spec.k == 1:
        C = np.einsum(
            "iu,jv,uvw,wl->ijl", S, S, A.constants, Sinv
        ) % spec.p
        unit = (A.unit @ Sinv) % spec.p
    else:
        raise NotImplementedError("basis changes over extension fields are unused")
    return FinDimAlgebra(spec, C, unit)


# ------------------------------------------------------------------
# JSON exchange
# ------------------------------------------------------------------

def algebra_to_json(A: FinDimAlgebra) -> dict:
    return {
        "p": A.spec.p,
        "k": A.spec.k,
        "dim": A.dim,
        "labels": list(A.labels),
        "constants": A.constants.tolist(),
        "unit": A.unit.tolist(),
    }


def algebra_from_json(data: dict) -> FinDimAlgebra:
    spec = field(int(data["p"]), int(data.get("k", 1)))
    return FinDimAlgebra(
        spec,
        np.asarray(data["constants"], dtype=np.int64),
        np.asarray(data["unit"], dtype=np.int64),
        labels=data.get("labels"),
    )
