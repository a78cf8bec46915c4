"""Permutations and finitely generated permutation groups on {1..n}.

Conventions, used consistently across the package:

* points are 1-based in all I/O (cycle notation, JSON), 0-based internally;
* permutations act on the right: ``(i)(p*q) == ((i)p)q``, matching the
  right-module convention of the algebras built downstream.

Groups are plain generator lists.  Element enumeration is breadth-first
closure with a hard cap, which is exact and sufficient at desk scale; no
stabilizer chains are kept.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    CapExceeded,
    DegreeMismatch,
    MalformedCycle,
    NotTransitive,
    PointOutOfRange,
    RepeatedPoint,
)

DEFAULT_CAP = 200_000


class Permutation:
    """A bijection of {0..n-1}, stored as an image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise RepeatedPoint(f"images {images} are not a bijection")
        self.images = images

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 0-based, each starting at its minimal point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycs)

    def one_based(self) -> list[int]:
        return [i + 1 for i in self.images]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, n={self.degree})"


def identity(degree: int) -> Permutation:
    return Permutation(range(degree))


def from_one_based(images: Sequence[int]) -> Permutation:
    images = list(images)
    for i in images:
        if not isinstance(i, int) or not 1 <= i <= len(images):
            raise PointOutOfRange(f"image {i} outside 1..{len(images)}")
    return Permutation([i - 1 for i in images])


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Right-action composition: the result maps i to q(p(i))."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees {p.degree} != {q.degree}")
    qi = q.images
    return Permutation([qi[i] for i in p.images])


_TOKEN = re.compile(r"\s*(\(|\)|,|\d+)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation like ``(1 2 3 4)(5 6)`` or ``()``.

    Points are 1-based decimal numbers separated by whitespace or commas;
    the empty cycle ``()`` denotes the identity.
    """
    pos = 0
    cycles: list[list[int]] = []
    current: Optional[list[int]] = None
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise MalformedCycle(f"unexpected character at position {pos}: {text[pos:]!r}")
        tok = m.group(1)
        pos = m.end()
        if tok == "(":
            if current is not None:
                raise MalformedCycle("nested '(' in cycle notation")
            current = []
        elif tok == ")":
            if current is None:
                raise MalformedCycle("unmatched ')'")
            if len(current) == 1:
                raise MalformedCycle(f"singleton cycle ({current[0] + 1}) is not allowed")
            cycles.append(current)
            current = None
        elif tok == ",":
            if current is None:
                raise MalformedCycle("',' outside a cycle")
        else:
            if current is None:
                raise MalformedCycle(f"point {tok} outside parentheses")
            point = int(tok)
            if not 1 <= point <= degree:
                raise PointOutOfRange(f"point {point} outside 1..{degree}")
            current.append(point - 1)
    if current is not None:
        raise MalformedCycle("unterminated cycle")
    images = list(range(degree))
    used = set()
    for cyc in cycles:
        for p in cyc:
            if p in used:
                raise RepeatedPoint(f"point {p + 1} appears twice")
            used.add(p)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a] = b
    return Permutation(images)


class PermGroup:
    """A permutation group given by generators; caches are write-once."""

    __slots__ = ("degree", "generators", "name", "_elements")

    def __init__(self, generators: Iterable[Permutation], name: str = ""):
        gens = tuple(generators)
        if not gens:
            raise ValueError("a PermGroup needs at least one generator")
        deg = gens[0].degree
        for g in gens:
            if g.degree != deg:
                raise DegreeMismatch("generators have mixed degrees")
        self.degree = deg
        self.generators = gens
        self.name = name
        self._elements = None

    @property
    def cached_order(self) -> Optional[int]:
        return None if self._elements is None else len(self._elements)

    def order(self, cap: int = DEFAULT_CAP) -> int:
        return len(self.elements(cap))

    def elements(self, cap: int = DEFAULT_CAP) -> tuple[Permutation, ...]:
        if self._elements is None:
            self._elements = tuple(enumerate_elements(self, cap))
        return self._elements

    def __contains__(self, p: Permutation) -> bool:
        return p in set(self.elements())

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label} on {self.degree} points, {len(self.generators)} generators>"


def enumerate_elements(G: PermGroup, cap: int = DEFAULT_CAP) -> list[Permutation]:
    """Breadth-first closure of the generators under composition.

    Returns all elements in discovery order (identity first) when the
    group order is at most ``cap``; raises CapExceeded otherwise.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    if G._elements is not None and len(G._elements) <= cap:
        return list(G._elements)
    e = identity(G.degree)
    seen = {e.images}
    order_list = [e]
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in G.generators:
                y = compose(x, g)
                if y.images not in seen:
                    seen.add(y.images)
                    order_list.append(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise CapExceeded(len(seen), cap)
        frontier = nxt
    if G._elements is None:
        G._elements = tuple(order_list)
    return order_list


def orbits(G: PermGroup) -> list[list[int]]:
    """Orbit partition of {0..n-1}, each orbit sorted, ordered by minimum."""
    n = G.degree
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        orb = [start]
        seen[start] = True
        queue = [start]
        while queue:
            a = queue.pop()
            for g in G.generators:
                b = g.images[a]
                if not seen[b]:
                    seen[b] = True
                    orb.append(b)
                    queue.append(b)
        out.append(sorted(orb))
    return out


def is_transitive(G: PermGroup) -> bool:
    return len(orbits(G)) == 1


def point_orbit_ids(G: PermGroup) -> list[int]:
    ids = [0] * G.degree
    for i, orb in enumerate(orbits(G)):
        for a in orb:
            ids[a] = i
    return ids


def _block_closure(G: PermGroup, alpha: int, beta: int) -> int:
    """Size of the minimal block containing {alpha, beta} (union-find merge)."""
    n = G.degree
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = [(alpha, beta)]
    ra, rb = find(alpha), find(beta)
    parent[rb] = ra
    while queue:
        a, b = queue.pop()
        for g in G.generators:
            ga, gb = g.images[a], g.images[b]
            rga, rgb = find(ga), find(gb)
            if rga != rgb:
                parent[rgb] = rga
                queue.append((ga, gb))
    root = find(alpha)
    return sum(1 for x in range(n) if find(x) == root)


def is_primitive(G: PermGroup) -> bool:
    """Minimal-block test: primitive iff merging {0, beta} always floods."""
    if not is_transitive(G):
        raise NotTransitive("primitivity is only defined for transitive groups")
    n = G.degree
    if n == 1:
        return True
    for beta in range(1, n):
        if _block_closure(G, 0, beta) != n:
            return False
    return True


@dataclass(frozen=True)
class RegularCheck:
    is_regular: bool
    membership_verified: bool
    subgroup_order: int

    def __bool__(self) -> bool:
        return self.is_regular


def is_regular_subgroup(
    G: PermGroup, sub_gens: Sequence[Permutation], cap: int = DEFAULT_CAP
) -> RegularCheck:
    """Check that the subgroup generated by sub_gens is transitive of order n.

    Membership of the given generators in G is verified only when G itself
    is enumerable under the cap; otherwise the result is flagged
    ``membership_verified=False`` and the generators are trusted.
    """
    for s in sub_gens:
        if s.degree != G.degree:
            raise DegreeMismatch("subgroup generator degree differs from ambient group")
    sub = PermGroup(list(sub_gens) or [identity(G.degree)])
    elems = enumerate_elements(sub, cap)
    verified = False
    try:
        ambient = set(G.elements(cap))
        verified = True
        if any(s not in ambient for s in sub_gens):
            return RegularCheck(False, True, len(elems))
    except CapExceeded:
        pass
    regular = len(elems) == G.degree and is_transitive(sub)
    return RegularCheck(regular, verified, len(elems))


def find_cyclic_regular(G: PermGroup, cap: int = DEFAULT_CAP) -> Optional[Permutation]:
    """First element (in enumeration order) that is a single n-cycle.

    Such an element generates a cyclic regular subgroup.  Returns None when
    no element of G is an n-cycle.
    """
    if not is_transitive(G):
        raise NotTransitive("regular subgroups require a transitive ambient group")
    n = G.degree
    for g in G.elements(cap):
        cycs = g.cycles()
        if len(cycs) == 1 and len(cycs[0]) == n:
            return g
    return None


def group_to_json(G: PermGroup) -> dict:
    return {
        "degree": G.degree,
        "generators": [g.one_based() for g in G.generators],
    }


def group_from_json(data: dict) -> PermGroup:
    from .errors import ParseError

    try:
        degree = data["degree"]
        gens = data["generators"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"group JSON missing field: {exc}") from exc
    if not isinstance(degree, int) or degree < 1:
        raise ParseError(f"bad degree {degree!r}")
    perms = []
    for idx, images in enumerate(gens):
        if len(images) != degree:
            raise ParseError(
                f"generator {idx} has {len(images)} images, expected {degree}",
                location=f"generators[{idx}]",
            )
        try:
            perms.append(from_one_based(images))
        except (PointOutOfRange, RepeatedPoint) as exc:
            raise ParseError(
                f"generator {idx}: {exc}", location=f"generators[{idx}]"
            ) from exc
    return PermGroup(perms)
