"""Schur rings over finite groups given by multiplication tables.

A Schur partition of G is a partition into basic sets with {e} a cell,
closed under inversion, such that the products of cell sums in the
integral group ring stay in the span of the cell sums.  ``validate``
checks that closure directly and returns the integer structure tensor;
the constructions (regular-action transfer, cyclotomic partitions,
tensor and wedge products) all re-validate their output.

Exhaustive enumeration is a pruned backtracking search: cells are chosen
for the minimal unplaced element, a cell and its inverse cell are placed
together, and partial products of completed cells must already be
constant on every completed cell.  A naive enumerator (all set
partitions, no pruning) cross-checks it on groups of order <= 10.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import perm
from .algebra import FinDimAlgebra
from .errors import (
    GroupTooLarge,
    IncompatibleInputs,
    InvalidSchurPartition,
    NotAutomorphism,
    NotCyclic,
    NotRegular,
    NotTransitive,
)
from .gfield import field

ENUM_MAX_ORDER = 16
NAIVE_MAX_ORDER = 10


class FiniteGroupTable:
    """A finite group as an explicit multiplication table.

    ``mul[i, j]`` is the index of element i * element j; the identity is
    located (and verified unique) at construction, along with inverses
    and associativity.
    """

    def __init__(self, mul, labels: Optional[Sequence[str]] = None, check: bool = True):
        M = np.asarray(mul, dtype=np.int64)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise ValueError("multiplication table must be square")
        n = M.shape[0]
        self.order = n
        self.mul = M
        ident = [e for e in range(n)
                 if np.array_equal(M[e], np.arange(n)) and np.array_equal(M[:, e], np.arange(n))]
        if len(ident) != 1:
            raise ValueError("table has no unique identity element")
        self.identity = ident[0]
        inv = np.full(n, -1, dtype=np.int64)
        for i in range(n):
            js = np.nonzero(M[i] == self.identity)[0]
            if js.size != 1 or M[js[0], i] != self.identity:
                raise ValueError(f"element {i} lacks a two-sided inverse")
            inv[i] = js[0]
        self.inv = inv
        self.labels = tuple(labels) if labels else tuple(str(i) for i in range(n))
        if check:
            # left[i,j,k] = (ij)k, right[i,j,k] = i(jk)
            if not np.array_equal(M[M, :], M[:, M]):
                raise ValueError("table is not associative")

    def is_cyclic_canonical(self) -> bool:
        n = self.order
        idx = np.arange(n)
        return np.array_equal(self.mul, (idx[:, None] + idx[None, :]) % n)

    def subgroup_closure(self, gens: Iterable[int]) -> tuple[int, ...]:
        seen = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                for y in (int(self.mul[x, g]), int(self.mul[g, x])):
                    if y not in seen:
                        seen.add(y)
                        frontier.append(y)
        return tuple(sorted(seen))

    def all_subgroups(self) -> list[tuple[int, ...]]:
        """Every subgroup, found by closing known subgroups with one element."""
        found = {(self.identity,)}
        frontier = [(self.identity,)]
        while frontier:
            H = frontier.pop()
            for g in range(self.order):
                if g in H:
                    continue
                K = self.subgroup_closure(set(H) | {g})
                if K not in found:
                    found.add(K)
                    frontier.append(K)
        return sorted(found, key=lambda s: (len(s), s))

    def is_normal(self, sub: Sequence[int]) -> bool:
        S = set(sub)
        for g in range(self.order):
            gi = int(self.inv[g])
            for h in sub:
                if int(self.mul[self.mul[g, h], gi]) not in S:
                    return False
        return True

    def __repr__(self) -> str:
        return f"<FiniteGroupTable order={self.order}>"


def cyclic_table(n: int) -> FiniteGroupTable:
    idx = np.arange(n)
    mul = (idx[:, None] + idx[None, :]) % n
    return FiniteGroupTable(mul, labels=[str(i) for i in range(n)], check=False)


def direct_product_table(A: FiniteGroupTable, B: FiniteGroupTable) -> FiniteGroupTable:
    na, nb = A.order, B.order
    mul = np.empty((na * nb, na * nb), dtype=np.int64)
    for i in range(na):
        for a in range(nb):
            row = A.mul[i][:, None] * nb + B.mul[a][None, :]
            mul[i * nb + a] = row.reshape(-1)
    labels = [f"({la},{lb})" for la in A.labels for lb in B.labels]
    return FiniteGroupTable(mul, labels=labels, check=False)


def subgroup_table(G: FiniteGroupTable, members: Sequence[int]) -> tuple[FiniteGroupTable, dict[int, int]]:
    """Induced table on a subset (must be closed); returns (table, G->sub index map)."""
    members = sorted(set(int(m) for m in members))
    pos = {g: i for i, g in enumerate(members)}
    n = len(members)
    mul = np.empty((n, n), dtype=np.int64)
    for i, gi in enumerate(members):
        for j, gj in enumerate(members):
            prod = int(G.mul[gi, gj])
            if prod not in pos:
                raise ValueError(f"subset is not closed: {gi}*{gj} escapes")
            mul[i, j] = pos[prod]
    labels = [G.labels[g] for g in members]
    return FiniteGroupTable(mul, labels=labels), pos


def quotient_table(G: FiniteGroupTable, U: Sequence[int]) -> tuple[FiniteGroupTable, np.ndarray]:
    """Quotient by a normal subgroup; returns (table, coset id per element).

    Cosets are numbered by their minimal member, ascending, so the
    identity coset is number 0.
    """
    Uset = sorted(set(int(u) for u in U))
    if not G.is_normal(Uset):
        raise ValueError("quotients need a normal subgroup")
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        members = sorted(int(G.mul[g, u]) for u in Uset)
        cid = len(reps)
        reps.append(members[0])
        for m in members:
            coset_of[m] = cid
    q = len(reps)
    mul = np.empty((q, q), dtype=np.int64)
    for a, ra in enumerate(reps):
        for b, rb in enumerate(reps):
            mul[a, b] = coset_of[int(G.mul[ra, rb])]
    labels = [f"{G.labels[r]}U" for r in reps]
    return FiniteGroupTable(mul, labels=labels), coset_of


# ------------------------------------------------------------------
# partitions and validation
# ------------------------------------------------------------------

class SchurPartition:
    """A candidate Schur partition; cells sorted by minimal element."""

    def __init__(self, group: FiniteGroupTable, cells: Iterable[Iterable[int]]):
        norm = [tuple(sorted(set(int(x) for x in cell))) for cell in cells]
        norm = [c for c in norm if c]
        norm.sort(key=lambda c: c[0])
        self.group = group
        self.cells = tuple(norm)
        self.point_map: Optional[np.ndarray] = None  # set by regular transfer

    @property
    def rank(self) -> int:
        return len(self.cells)

    def cell_of(self) -> np.ndarray:
        out = np.full(self.group.order, -1, dtype=np.int64)
        for ci, cell in enumerate(self.cells):
            for g in cell:
                out[g] = ci
        return out

    def key(self) -> tuple[tuple[int, ...], ...]:
        return self.cells

    def to_json(self) -> dict:
        grp: dict | str
        if self.group.is_cyclic_canonical():
            grp = {"order": self.group.order, "cyclic": True}
        else:
            grp = {"order": self.group.order, "table": self.group.mul.tolist()}
        return {"group": grp, "basic_sets": [list(c) for c in self.cells]}

    def __repr__(self) -> str:
        return f"<SchurPartition {self.cells}>"


@dataclass
class SchurRing:
    partition: SchurPartition
    tensor: np.ndarray  # integer structure constants c[i][j][k]

    @property
    def rank(self) -> int:
        return self.partition.rank

    def to_algebra(self, p: int, k: int = 1) -> FinDimAlgebra:
        cells = self.partition.cells
        e_cell = next(i for i, c in enumerate(cells) if len(c) == 1
                      and c[0] == self.partition.group.identity)
        unit = np.zeros(len(cells), dtype=np.int64)
        unit[e_cell] = 1
        labels = tuple("{" + ",".join(self.partition.group.labels[g] for g in c) + "}"
                       for c in cells)
        return FinDimAlgebra(field(p, k), self.tensor % p, unit, labels=labels)


def _axiom_check(partition: SchurPartition) -> Optional[tuple[str, dict]]:
    G = partition.group
    cells = partition.cells
    seen: set[int] = set()
    for cell in cells:
        for g in cell:
            if g in seen:
                return "overlap", {"element": int(g)}
            seen.add(g)
    if seen != set(range(G.order)):
        return "cover", {"missing": sorted(set(range(G.order)) - seen)}
    if (G.identity,) not in cells:
        return "identity", {"identity": int(G.identity)}
    cellset = set(cells)
    for cell in cells:
        inv_cell = tuple(sorted(int(G.inv[g]) for g in cell))
        if inv_cell not in cellset:
            return "inverse-closure", {"cell": list(cell)}
    return None


def validate(partition: SchurPartition) -> SchurRing:
    """Accept iff every product of cell sums is constant on every cell.

    The returned tensor satisfies cell_i * cell_j = sum_k c[i][j][k] cell_k
    in the integral group ring.  Raises InvalidSchurPartition with the
    first witness (cells i, j and two group elements of a cell on which
    the product coefficients differ) otherwise.
    """
    bad = _axiom_check(partition)
    if bad is not None:
        kind, info = bad
        raise InvalidSchurPartition(f"partition axiom failed: {kind}", witness=info)
    G = partition.group
    cells = partition.cells
    r = len(cells)
    cell_of = partition.cell_of()
    tensor = np.zeros((r, r, r), dtype=np.int64)
    for i, X in enumerate(cells):
        for j, Y in enumerate(cells):
            coeffs = np.zeros(G.order, dtype=np.int64)
            for x in X:
                np.add.at(coeffs, G.mul[x, list(Y)], 1)
            for kcell, Z in enumerate(cells):
                vals = coeffs[list(Z)]
                if not (vals == vals[0]).all():
                    lo = int(np.argmin(vals))
                    hi = int(np.argmax(vals))
                    raise InvalidSchurPartition(
                        f"product of cells {i} and {j} is not constant on cell {kcell}",
                        witness={
                            "cell_i": list(X), "cell_j": list(Y),
                            "g": int(Z[lo]), "h": int(Z[hi]),
                            "coeff_g": int(vals[lo]), "coeff_h": int(vals[hi]),
                        },
                    )
                tensor[i, j, kcell] = int(vals[0])
    return SchurRing(partition, tensor)


def try_validate(partition: SchurPartition) -> Optional[SchurRing]:
    try:
        return validate(partition)
    except InvalidSchurPartition:
        return None


# ------------------------------------------------------------------
# constructions
# ------------------------------------------------------------------

def from_regular_action(G: perm.PermGroup, N: Sequence[perm.Permutation],
                        cap: int = perm.DEFAULT_CAP) -> SchurPartition:
    """Schur partition on a regular subgroup N from the point-stabilizer orbits.

    Points are identified with N through the bijection sending a point to
    the unique element of N carrying the base point (point 1) there; the
    orbits of the stabilizer of the base point then partition N.  The
    result is validated, and carries ``point_map`` (point -> N index) for
    exact comparison against the orbital tensor.
    """
    if not perm.is_transitive(G):
        raise NotTransitive("regular transfer needs a transitive group")
    n = G.degree
    elems = sorted(set(N), key=lambda g: g.images)
    if len(elems) != n:
        raise NotRegular(f"need exactly {n} subgroup elements, got {len(elems)}")
    check = perm.is_regular_subgroup(G, elems, cap=cap)
    if not check.is_regular:
        raise NotRegular("given elements do not form a regular subgroup")
    # element index by the point it sends the base point to
    by_target = {g.images[0]: gi for gi, g in enumerate(elems)}
    if len(by_target) != n:
        raise NotRegular("subgroup is not regular: repeated base-point images")
    mul = np.empty((n, n), dtype=np.int64)
    index_of = {g.images: gi for gi, g in enumerate(elems)}
    for i, gi in enumerate(elems):
        for j, gj in enumerate(elems):
            prod = perm.compose(gi, gj)
            if prod.images not in index_of:
                raise NotRegular("given elements are not closed under composition")
            mul[i, j] = index_of[prod.images]
    labels = [g.cycle_string() for g in elems]
    table = FiniteGroupTable(mul, labels=labels)
    # stabilizer orbits on points, pushed through the bijection
    stab = [g for g in G.elements(cap) if g.images[0] == 0]
    seen = [False] * n
    cells = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = {start}
        queue = [start]
        seen[start] = True
        while queue:
            a = queue.pop()
            for h in stab:
                b = h.images[a]
                if not seen[b]:
                    seen[b] = True
                    orbit.add(b)
                    queue.append(b)
        cells.append(sorted(by_target[pt] for pt in orbit))
    part = SchurPartition(table, cells)
    validate(part)
    point_map = np.empty(n, dtype=np.int64)
    for pt, gi in by_target.items():
        point_map[pt] = gi
    part.point_map = point_map
    return part


def cyclotomic(G: FiniteGroupTable, aut_gens: Sequence[Sequence[int]]) -> SchurPartition:
    """Orbit partition of a group of automorphisms given by image arrays."""
    n = G.order
    for arr in aut_gens:
        a = np.asarray(arr, dtype=np.int64)
        if sorted(a.tolist()) != list(range(n)):
            raise NotAutomorphism("automorphism images are not a bijection")
        if not np.array_equal(a[G.mul], G.mul[np.ix_(a, a)]):
            raise NotAutomorphism("map does not respect the multiplication table")
        if a[G.identity] != G.identity:
            raise NotAutomorphism("map moves the identity")
    seen = [False] * n
    cells = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = {start}
        queue = [start]
        seen[start] = True
        while queue:
            x = queue.pop()
            for arr in aut_gens:
                y = int(arr[x])
                if not seen[y]:
                    seen[y] = True
                    orbit.add(y)
                    queue.append(y)
        cells.append(sorted(orbit))
    part = SchurPartition(G, cells)
    validate(part)
    return part


def unit_multiplier_auts(n: int, units: Sequence[int]) -> list[list[int]]:
    """Automorphisms x -> u*x of the canonical cyclic group of order n."""
    out = []
    for u in units:
        if np.gcd(u, n) != 1:
            raise NotAutomorphism(f"{u} is not a unit mod {n}")
        out.append([(u * x) % n for x in range(n)])
    return out


def tensor(A: SchurPartition, B: SchurPartition) -> SchurPartition:
    """Cellwise product partition on the direct product group."""
    G = direct_product_table(A.group, B.group)
    nb = B.group.order
    cells = []
    for X in A.cells:
        for Y in B.cells:
            cells.append([x * nb + y for x in X for y in Y])
    part = SchurPartition(G, cells)
    validate(part)
    return part


def wedge(G: FiniteGroupTable, H_members: Sequence[int], U_members: Sequence[int],
          A_H: SchurPartition, A_Q: SchurPartition) -> SchurPartition:
    """Wedge product: A_H inside H, pullbacks of A_Q cells outside.

    Hypotheses checked and named on failure: U normal in G, 1 < U <= H < G,
    A_H lives on the subgroup table of H with U a union of its cells, and
    A_Q lives on the quotient table G/U with H/U a union of its cells.
    The assembled partition is validated (the hypotheses do not guarantee
    ring closure for U < H, only for U = H).
    """
    Hs = sorted(set(int(h) for h in H_members))
    Us = sorted(set(int(u) for u in U_members))
    if len(Hs) >= G.order:
        raise IncompatibleInputs("H must be a proper subgroup of G")
    if len(Us) <= 1:
        raise IncompatibleInputs("U must be nontrivial")
    if not set(Us) <= set(Hs):
        raise IncompatibleInputs("U must be contained in H")
    if not G.is_normal(Us):
        raise IncompatibleInputs("U must be normal in G")
    Htab, Hpos = subgroup_table(G, Hs)
    if A_H.group.order != Htab.order or not np.array_equal(A_H.group.mul, Htab.mul):
        raise IncompatibleInputs("A_H is not a partition of the subgroup table of H")
    Qtab, coset_of = quotient_table(G, Us)
    if A_Q.group.order != Qtab.order or not np.array_equal(A_Q.group.mul, Qtab.mul):
        raise IncompatibleInputs("A_Q is not a partition of the quotient table G/U")
    # U must be a union of A_H cells
    U_in_H = {Hpos[u] for u in Us}
    covered = set()
    for cell in A_H.cells:
        if set(cell) <= U_in_H:
            covered |= set(cell)
        elif set(cell) & U_in_H:
            raise IncompatibleInputs("U is not a union of A_H basic sets")
    if covered != U_in_H:
        raise IncompatibleInputs("U is not a union of A_H basic sets")
    # H/U must be a union of A_Q cells
    HU = {int(coset_of[h]) for h in Hs}
    for cell in A_Q.cells:
        inside = set(cell) <= HU
        if not inside and set(cell) & HU:
            raise IncompatibleInputs("H/U is not a union of A_Q basic sets")
    H_index_to_G = {i: g for g, i in Hpos.items()}
    cells = [[H_index_to_G[i] for i in cell] for cell in A_H.cells]
    for cell in A_Q.cells:
        if set(cell) <= HU:
            continue
        cells.append([g for g in range(G.order) if int(coset_of[g]) in set(cell)])
    part = SchurPartition(G, cells)
    validate(part)
    return part


# ------------------------------------------------------------------
# enumeration
# ------------------------------------------------------------------

def _products_constant_on(G: FiniteGroupTable, cells: list[tuple[int, ...]],
                          candidate: tuple[int, ...]) -> bool:
    """Partial closure prune: products of completed cells must be constant
    on the candidate cell, and products involving the candidate must be
    constant on every completed cell."""
    n = G.order
    for X in cells:
        for Y in cells:
            coeffs = np.zeros(n, dtype=np.int64)
            for x in X:
                np.add.at(coeffs, G.mul[x, list(Y)], 1)
            vals = coeffs[list(candidate)]
            if not (vals == vals[0]).all():
                return False
    for X in cells:
        for pair in ((X, candidate), (candidate, X)):
            coeffs = np.zeros(n, dtype=np.int64)
            for x in pair[0]:
                np.add.at(coeffs, G.mul[x, list(pair[1])], 1)
            for Z in cells:
                vals = coeffs[list(Z)]
                if not (vals == vals[0]).all():
                    return False
            vals = coeffs[list(candidate)]
            if not (vals == vals[0]).all():
                return False
    coeffs = np.zeros(n, dtype=np.int64)
    for x in candidate:
        np.add.at(coeffs, G.mul[x, list(candidate)], 1)
    for Z in cells + [candidate]:
        vals = coeffs[list(Z)]
        if not (vals == vals[0]).all():
            return False
    return True


def enumerate_all(G: FiniteGroupTable) -> list[SchurRing]:
    """All Schur rings over G (|G| <= 16), deterministically ordered.

    Backtracking over the cell of the minimal unplaced element; a cell is
    placed together with its inverse cell, and partial products must
    already be constant on all placed cells (Wielandt-style pruning).
    Every leaf is re-validated from scratch.
    """
    if G.order > ENUM_MAX_ORDER:
        raise GroupTooLarge(f"enumeration capped at order {ENUM_MAX_ORDER}")
    n = G.order
    results: list[SchurRing] = []
    seen_keys: set = set()

    def recurse(cells: list[tuple[int, ...]], unplaced: set[int]) -> None:
        if not unplaced:
            part = SchurPartition(G, cells)
            ring = try_validate(part)
            if ring is not None and part.key() not in seen_keys:
                seen_keys.add(part.key())
                results.append(ring)
            return
        m = min(unplaced)
        rest = sorted(unplaced - {m})
        # candidate cells containing m, by increasing bitmask over rest
        for mask in range(1 << len(rest)):
            cand = (m,) + tuple(rest[i] for i in range(len(rest)) if mask >> i & 1)
            inv_cell = tuple(sorted(int(G.inv[g]) for g in cand))
            cand_set = set(cand)
            if inv_cell == cand:
                placed = [cand]
            else:
                if set(inv_cell) & cand_set or not set(inv_cell) <= unplaced:
                    continue
                placed = [cand, inv_cell]
            ok = True
            trial = list(cells)
            for cell in placed:
                if not _products_constant_on(G, trial, cell):
                    ok = False
                    break
                trial.append(cell)
            if not ok:
                continue
            recurse(trial, unplaced - cand_set - set(inv_cell))

    recurse([(G.identity,)], set(range(n)) - {G.identity})
    results.sort(key=lambda r: r.partition.key())
    return results


def _set_partitions(items: list[int]):
    """All set partitions, by restricted growth strings."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in _set_partitions(rest):
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1:]
        yield [[first]] + sub


def enumerate_all_naive(G: FiniteGroupTable) -> list[SchurRing]:
    """Unpruned oracle enumerator: filter every set partition of G - {e}."""
    if G.order > NAIVE_MAX_ORDER:
        raise GroupTooLarge(f"naive enumeration capped at order {NAIVE_MAX_ORDER}")
    rest = [g for g in range(G.order) if g != G.identity]
    out = []
    seen = set()
    for blocks in _set_partitions(rest):
        part = SchurPartition(G, [[G.identity]] + blocks)
        if part.key() in seen:
            continue
        ring = try_validate(part)
        if ring is not None:
            seen.add(part.key())
            out.append(ring)
    out.sort(key=lambda r: r.partition.key())
    return out


# ------------------------------------------------------------------
# Leung-Man style labeling over cyclic groups
# ------------------------------------------------------------------

def classify_cyclic(partition: SchurPartition) -> str:
    """First matching label among trivial, cyclotomic, tensor, wedge.

    The group must be the canonical cyclic table (element i is i mod n).
    The four cases are not mutually exclusive; the tie-break order is
    fixed as listed.  "unclassified" signals a failure of the cyclic
    classification and is asserted unreachable in tests.
    """
    G = partition.group
    if not G.is_cyclic_canonical():
        raise NotCyclic("classification requires the canonical cyclic table")
    n = G.order
    cells = set(partition.cells)

    # (i) trivial: group algebra or {e} + everything else
    if all(len(c) == 1 for c in cells):
        return "trivial"
    if len(cells) <= 2:
        return "trivial"

    # (ii) cyclotomic: orbit partition of a subgroup of the unit group
    for T in _unit_subgroups(n):
        orbit_cells = _unit_orbit_cells(n, T)
        if orbit_cells == set(partition.cells):
            return "cyclotomic"

    cell_of = partition.cell_of()

    def is_A_subgroup(members: tuple[int, ...]) -> bool:
        ids = {int(cell_of[g]) for g in members}
        covered = sorted(g for i in ids for g in partition.cells[i])
        return covered == sorted(members)

    divisors = [d for d in range(1, n + 1) if n % d == 0]
    subgroup_of = {d: tuple(sorted((n // d) * i for i in range(d))) for d in divisors}

    # (iii) tensor: G = H x U with coprime A-subgroups and product cells
    for dh in divisors:
        du = n // dh
        if dh <= 1 or du <= 1 or np.gcd(dh, du) != 1:
            continue
        H = subgroup_of[dh]
        U = subgroup_of[du]
        if not (is_A_subgroup(H) and is_A_subgroup(U)):
            continue
        h_cells = [c for c in partition.cells if set(c) <= set(H)]
        u_cells = [c for c in partition.cells if set(c) <= set(U)]
        prod_cells = set()
        for X in h_cells:
            for Y in u_cells:
                prod_cells.add(tuple(sorted((x + y) % n for x in X for y in Y)))
        if prod_cells == set(partition.cells):
            return "tensor"

    # (iv) wedge: proper A-subgroups 1 < U <= H < G, outside cells U-coset unions
    for dh in divisors:
        if dh == n or dh == 1:
            continue
        H = subgroup_of[dh]
        if not is_A_subgroup(H):
            continue
        for du in divisors:
            if du == 1 or dh % du != 0:
                continue
            U = subgroup_of[du]
            if not is_A_subgroup(U):
                continue
            step = n // du
            ok = True
            for cell in partition.cells:
                if set(cell) <= set(H):
                    continue
                cs = set(cell)
                for g in cell:
                    if {(g + step * i) % n for i in range(du)} - cs:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return "wedge"
    return "unclassified"


def _unit_subgroups(n: int) -> list[tuple[int, ...]]:
    units = [u for u in range(1, n) if np.gcd(u, n) == 1]
    found = {(1,)}
    frontier = [(1,)]
    while frontier:
        T = frontier.pop()
        for u in units:
            if u in T:
                continue
            K = {1}
            queue = [1]
            gens = set(T) | {u}
            while queue:
                x = queue.pop()
                for g in gens:
                    y = (x * g) % n
                    if y not in K:
                        K.add(y)
                        queue.append(y)
            K = tuple(sorted(K))
            if K not in found:
                found.add(K)
                frontier.append(K)
    return sorted(found, key=lambda s: (len(s), s))


def _unit_orbit_cells(n: int, T: Sequence[int]) -> set:
    cells = set()
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        orbit = sorted({(start * t) % n for t in T})
        for x in orbit:
            seen[x] = True
        cells.add(tuple(orbit))
    return cells


def canonicalize_cyclic(partition: SchurPartition) -> SchurPartition:
    """Reindex a partition over a cyclic group onto the canonical table.

    Elements become exponents of the first generator found in index
    order; different generators give automorphic copies, so the
    classification labels are unaffected by the choice.
    """
    G = partition.group
    n = G.order
    gen = None
    for g in range(n):
        order = 1
        x = g
        while x != G.identity:
            x = int(G.mul[x, g])
            order += 1
            if order > n:
                break
        if order == n:
            gen = g
            break
    if gen is None:
        raise NotCyclic("group table has no generator")
    elem_of_power = [G.identity]
    for _ in range(1, n):
        elem_of_power.append(int(G.mul[elem_of_power[-1], gen]))
    power_of = {e: i for i, e in enumerate(elem_of_power)}
    cells = [[power_of[e] for e in cell] for cell in partition.cells]
    return SchurPartition(cyclic_table(n), cells)


def partition_from_json(data: dict) -> SchurPartition:
    """Read the partition exchange format produced by SchurPartition.to_json."""
    from .errors import ParseError

    try:
        grp = data["group"]
        sets = data["basic_sets"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"partition JSON missing field: {exc}") from exc
    order = int(grp["order"])
    if grp.get("cyclic"):
        table = cyclic_table(order)
    else:
        table = FiniteGroupTable(np.asarray(grp["table"], dtype=np.int64))
    return SchurPartition(table, sets)
