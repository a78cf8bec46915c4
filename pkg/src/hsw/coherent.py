"""Orbitals of a permutation group and the associated coherent algebra.

The 2-orbits of G acting diagonally on pairs partition Omega x Omega; the
partition, its valencies and the intersection-number tensor c[t][r][s]
(counting points gamma with (alpha, gamma) in r and (gamma, beta) in s,
for any (alpha, beta) in t) determine the centralizer algebra of the
permutation module: the 0/1 orbital matrices A_r multiply by
A_r A_s = sum_t c[t][r][s] A_t, over the integers.

Orbital ids are BFS discovery order over pairs in row-major order, and
representatives are the first pair discovered, so ids, reports and every
downstream certificate are deterministic given the generator list.
Intersection numbers are computed and stored as integers; they are
independent of the base field and get reduced mod p only in to_algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import perm
from .algebra import FinDimAlgebra
from .errors import AxiomViolation, DegreeTooLarge
from .gfield import FieldSpec, field
from .linalg import Echelon, det

ORACLE_MAX_DEGREE = 30


@dataclass(frozen=True)
class Orbital:
    id: int
    rep: tuple[int, int]
    valency: int
    reflexive: bool
    npairs: int
    source_orbit: int

    def contains(self, config: "CoherentConfig", a: int, b: int) -> bool:
        return int(config.pair_index[a, b]) == self.id


class CoherentConfig:
    """Partition of Omega x Omega into orbitals plus derived data."""

    def __init__(self, degree: int, pair_index: np.ndarray,
                 point_orbit: np.ndarray, group: Optional[perm.PermGroup] = None):
        self.degree = degree
        self.pair_index = pair_index
        self.point_orbit = point_orbit
        self.group = group
        self.transitive = int(point_orbit.max()) == 0 if degree else True
        self.orbitals = self._collect_orbitals()
        self._tensor: Optional[np.ndarray] = None

    def _collect_orbitals(self) -> tuple[Orbital, ...]:
        n = self.degree
        count = int(self.pair_index.max()) + 1
        reps: list[Optional[tuple[int, int]]] = [None] * count
        for a in range(n):
            for b in range(n):
                oid = int(self.pair_index[a, b])
                if reps[oid] is None:
                    reps[oid] = (a, b)
        out = []
        npairs = np.bincount(self.pair_index.ravel(), minlength=count)
        for oid, rep in enumerate(reps):
            if rep is None:
                raise AxiomViolation(f"orbital id {oid} has no pairs")
            a, b = rep
            valency = int(np.count_nonzero(self.pair_index[a] == oid))
            out.append(
                Orbital(oid, rep, valency, a == b, int(npairs[oid]),
                        int(self.point_orbit[a]))
            )
        return tuple(out)

    @property
    def rank(self) -> int:
        return len(self.orbitals)

    @property
    def valencies(self) -> list[int]:
        return [o.valency for o in self.orbitals]

    def subdegrees(self) -> list[int]:
        if not self.transitive:
            raise AxiomViolation("subdegrees are defined for transitive groups")
        return sorted(self.valencies)

    def star(self) -> np.ndarray:
        """Permutation of orbital ids induced by (a, b) -> (b, a)."""
        out = np.empty(self.rank, dtype=np.int64)
        for o in self.orbitals:
            a, b = o.rep
            out[o.id] = self.pair_index[b, a]
        return out

    def reflexive_of_orbit(self) -> dict[int, int]:
        out = {}
        for o in self.orbitals:
            if o.reflexive:
                out[o.source_orbit] = o.id
        return out

    def orbital_matrices(self) -> np.ndarray:
        """(rank, n, n) stack of 0/1 integer matrices, one per orbital."""
        eye = np.arange(self.rank)
        return (self.pair_index[None, :, :] == eye[:, None, None]).astype(np.int64)

    @property
    def tensor(self) -> np.ndarray:
        if self._tensor is None:
            self._tensor = intersection_numbers(self)
        return self._tensor

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "rank": self.rank,
            "representatives": [[a + 1, b + 1] for (a, b) in
                                (o.rep for o in self.orbitals)],
            "valencies": self.valencies,
            "pair_counts": [o.npairs for o in self.orbitals],
            "tensor": self.tensor.tolist(),
        }

    @classmethod
    def from_pair_matrix(cls, pair_index, point_orbit=None) -> "CoherentConfig":
        """Rebuild a config from a raw partition matrix (e.g. a fixture).

        No group is attached; verify_axioms() decides whether the
        partition is actually coherent.
        """
        M = np.asarray(pair_index, dtype=np.int64)
        n = M.shape[0]
        if point_orbit is None:
            point_orbit = np.zeros(n, dtype=np.int64)
        return cls(n, M, np.asarray(point_orbit, dtype=np.int64))


def orbitals(G: perm.PermGroup) -> CoherentConfig:
    """The 2-orbit partition of G on ordered pairs (works intransitively too)."""
    n = G.degree
    images = np.array([g.images for g in G.generators], dtype=np.int64)
    pair_index = np.full((n, n), -1, dtype=np.int64)
    next_id = 0
    for a in range(n):
        for b in range(n):
            if pair_index[a, b] >= 0:
                continue
            pair_index[a, b] = next_id
            stack = [(a, b)]
            while stack:
                x, y = stack.pop()
                for gi in range(images.shape[0]):
                    u, v = int(images[gi, x]), int(images[gi, y])
                    if pair_index[u, v] < 0:
                        pair_index[u, v] = next_id
                        stack.append((u, v))
            next_id += 1
    orbit_ids = np.array(perm.point_orbit_ids(G), dtype=np.int64)
    return CoherentConfig(n, pair_index, orbit_ids, group=G)


def _pair_tensor_row(config: CoherentConfig, a: int, b: int) -> np.ndarray:
    """c[.,.] counts through the fixed pair (a, b), shape (rank, rank)."""
    rank = config.rank
    joint = config.pair_index[a, :] * rank + config.pair_index[:, b]
    return np.bincount(joint, minlength=rank * rank).reshape(rank, rank)


def intersection_numbers(config: CoherentConfig) -> np.ndarray:
    """Integer tensor c[t][r][s]; constancy is spot-checked on a second
    representative of each orbital with more than one pair."""
    rank = config.rank
    c = np.zeros((rank, rank, rank), dtype=np.int64)
    for o in config.orbitals:
        a, b = o.rep
        c[o.id] = _pair_tensor_row(config, a, b)
        if o.npairs > 1:
            flat = np.argwhere(config.pair_index == o.id)
            a2, b2 = (int(x) for x in flat[1])
            if not np.array_equal(c[o.id], _pair_tensor_row(config, a2, b2)):
                raise AxiomViolation(
                    f"intersection numbers differ between representatives of orbital {o.id}"
                )
    return c


@dataclass
class AxiomReport:
    partition_ok: bool
    star_ok: bool
    constancy_ok: bool
    triple_ok: bool
    failures: list[str]

    @property
    def passed(self) -> bool:
        return self.partition_ok and self.star_ok and self.constancy_ok and self.triple_ok

    def to_json(self) -> dict:
        return {
            "reflexive_partition": self.partition_ok,
            "star_closed": self.star_ok,
            "constant_intersection_numbers": self.constancy_ok,
            "triple_identity": self.triple_ok,
            "passed": self.passed,
            "failures": self.failures,
        }


def verify_axioms(config: CoherentConfig) -> AxiomReport:
    """Exhaustive check of the coherence axioms at desk scale.

    (1) reflexive orbitals partition the diagonal, (2) the transpose map
    permutes orbitals, (3) c[t][r][s] is constant over the pairs of t,
    and the triple identity |t| c^{t*}_{rs} = |r| c^{r*}_{st} = |s| c^{s*}_{tr}.
    """
    failures: list[str] = []
    n = config.degree
    M = config.pair_index

    diag_ids = {int(M[a, a]) for a in range(n)}
    partition_ok = True
    for o in config.orbitals:
        on_diag = o.id in diag_ids
        if on_diag != o.reflexive:
            partition_ok = False
            failures.append(f"orbital {o.id}: reflexive flag inconsistent with diagonal")
    for o in config.orbitals:
        if o.reflexive:
            rows, cols = np.nonzero(M == o.id)
            if not np.array_equal(rows, cols):
                partition_ok = False
                failures.append(f"reflexive orbital {o.id} leaves the diagonal")

    star = np.empty(config.rank, dtype=np.int64)
    star_ok = True
    for o in config.orbitals:
        a, b = o.rep
        star[o.id] = M[b, a]
    if not np.array_equal(M.T, star[M]):
        star_ok = False
        failures.append("transpose does not permute orbitals consistently")

    constancy_ok = True
    try:
        c = config.tensor
    except AxiomViolation as exc:
        failures.append(str(exc))
        return AxiomReport(partition_ok, star_ok, False, False, failures)
    for a in range(n):
        row = M[a, :]
        for b in range(n):
            t = int(M[a, b])
            joint = row * config.rank + M[:, b]
            counts = np.bincount(joint, minlength=config.rank ** 2).reshape(
                config.rank, config.rank
            )
            if not np.array_equal(counts, c[t]):
                constancy_ok = False
                failures.append(
                    f"intersection numbers at pair ({a + 1},{b + 1}) differ from orbital {t}"
                )
                break
        if not constancy_ok:
            break

    npairs = np.array([o.npairs for o in config.orbitals], dtype=np.int64)
    cst = c[star]
    lhs = npairs[:, None, None] * cst
    mid = npairs[None, :, None] * cst.transpose(2, 0, 1)
    rhs = npairs[None, None, :] * cst.transpose(1, 2, 0)
    triple_ok = bool(np.array_equal(lhs, mid) and np.array_equal(mid, rhs))
    if not triple_ok:
        failures.append("triple identity |t| c^{t*}_{rs} = |r| c^{r*}_{st} = |s| c^{s*}_{tr} fails")

    return AxiomReport(partition_ok, star_ok, constancy_ok, triple_ok, failures)


def to_algebra(config: CoherentConfig, p: int, k: int = 1) -> FinDimAlgebra:
    """The coherent algebra over GF(p^k): basis indexed by orbitals,
    r * s = sum_t c[t][r][s] t, unit the sum of the reflexive orbitals."""
    c = config.tensor
    constants = np.transpose(c, (1, 2, 0)) % p
    unit = np.array([1 if o.reflexive else 0 for o in config.orbitals], dtype=np.int64)
    labels = tuple(f"({o.rep[0] + 1},{o.rep[1] + 1})" for o in config.orbitals)
    return FinDimAlgebra(field(p, k), constants, unit % p, labels=labels)


@dataclass
class SymmetrizingForm:
    gram: np.ndarray
    nondegenerate: bool
    symmetric: bool
    field: tuple[int, int]

    def to_json(self) -> dict:
        return {
            "gram": self.gram.tolist(),
            "nondegenerate": self.nondegenerate,
            "symmetric": self.symmetric,
            "field": list(self.field),
        }


def symmetrizing_form(config: CoherentConfig, p: int, k: int = 1) -> SymmetrizingForm:
    """Gram matrix of (A_r, A_s) -> c[1_{source(r)}][r][s] over GF(p^k).

    For (half-)transitive groups this form is symmetric and associative;
    it is nondegenerate exactly when no point-stabilizer orbit size
    vanishes in the field.
    """
    spec = field(p, k)
    c = config.tensor
    refl = config.reflexive_of_orbit()
    rank = config.rank
    gram = np.zeros((rank, rank), dtype=np.int64)
    for r in range(rank):
        t = refl[config.orbitals[r].source_orbit]
        gram[r] = c[t][r] % p
    nondeg = int(det(spec, gram)) != 0
    sym = bool(np.array_equal(gram, gram.T))
    return SymmetrizingForm(gram, nondeg, sym, (p, k))


def centralizer_dimension_oracle(G: perm.PermGroup, p: int, k: int = 1) -> int:
    """dim of {X : P_g X = X P_g for all generators g} over GF(p^k).

    Independent check of the orbital count: the commutation constraints
    P_g X = X P_g say exactly X[g(i), g(j)] = X[i, j], and the dimension
    of the solution space is n^2 minus the rank of the constraint rows,
    echelonized exactly.
    """
    n = G.degree
    if n > ORACLE_MAX_DEGREE:
        raise DegreeTooLarge(f"oracle limited to degree {ORACLE_MAX_DEGREE}, got {n}")
    spec = field(p, k)
    ech = Echelon(spec, n * n)
    minus_one = spec.neg(spec.one)
    for g in G.generators:
        for i in range(n):
            gi = g.images[i]
            for j in range(n):
                gj = g.images[j]
                src = i * n + j
                dst = gi * n + gj
                if src == dst:
                    continue
                row = np.zeros(n * n, dtype=np.int64)
                row[dst] = spec.one
                row[src] = minus_one
                ech.insert(row)
    return n * n - ech.rank
