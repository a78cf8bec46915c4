"""Deterministic constructors for the benchmark permutation groups.

Generator choices are pinned: orbital ids, BFS representatives and every
golden report depend on them, so changing a generator list here is a
breaking change for the fixture tests.  The roster below is the default
sweep population; degree filters select the desk-scale subset.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

import numpy as np

from . import linalg, perm
from .errors import BadParameter
from .gfield import field, is_prime


def _perm_from_map(images: list[int], name: str = "") -> perm.Permutation:
    return perm.Permutation(images)


def cyclic(n: int) -> perm.PermGroup:
    if n < 2:
        raise BadParameter("cyclic groups need n >= 2")
    cycle = perm.Permutation([(a + 1) % n for a in range(n)])
    return perm.PermGroup([cycle], name=f"cyclic:{n}")


def dihedral(n: int) -> perm.PermGroup:
    """<n-cycle, reflection a -> -a> on n points, order 2n.

    For n = 4 this is exactly the pair (1 2 3 4), (2 4).
    """
    if n < 3:
        raise BadParameter("dihedral groups on n points need n >= 3")
    cycle = perm.Permutation([(a + 1) % n for a in range(n)])
    flip = perm.Permutation([(-a) % n for a in range(n)])
    return perm.PermGroup([cycle, flip], name=f"dihedral:{n}")


def symmetric_natural(n: int) -> perm.PermGroup:
    if n < 2:
        raise BadParameter("symmetric groups need n >= 2")
    cycle = perm.Permutation([(a + 1) % n for a in range(n)])
    if n == 2:
        return perm.PermGroup([cycle], name="sym:2")
    swap = perm.Permutation([1, 0] + list(range(2, n)))
    return perm.PermGroup([cycle, swap], name=f"sym:{n}")


def alternating_natural(n: int) -> perm.PermGroup:
    if n < 3:
        raise BadParameter("alternating groups need n >= 3")
    three = perm.Permutation([1, 2, 0] + list(range(3, n)))
    if n == 3:
        return perm.PermGroup([three], name="alt:3")
    if n % 2 == 1:
        big = perm.Permutation([(a + 1) % n for a in range(n)])
    else:
        big = perm.Permutation([0] + [1 + (a % (n - 1)) for a in range(1, n)])
    return perm.PermGroup([three, big], name=f"alt:{n}")


def sym_on_pairs(n: int) -> perm.PermGroup:
    """S_n on the 2-subsets of {1..n}, listed lexicographically."""
    if n < 4:
        raise BadParameter("pair actions need n >= 4")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    index = {p: a for a, p in enumerate(pairs)}
    base = symmetric_natural(n)

    def lift(g: perm.Permutation) -> perm.Permutation:
        images = []
        for (i, j) in pairs:
            u, v = g.images[i], g.images[j]
            images.append(index[(min(u, v), max(u, v))])
        return perm.Permutation(images)

    return perm.PermGroup([lift(g) for g in base.generators], name=f"sympairs:{n}")


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if is_prime(p) and q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise BadParameter(f"{q} is not a prime power")
            return p, k
    raise BadParameter(f"{q} is not a prime power")


def _primitive_element(q: int):
    """Smallest field code of multiplicative order q-1."""
    p, k = _prime_power(q)
    F = field(p, k)
    target = q - 1
    for c in range(2, q):
        order, x = 1, c
        while x != 1:
            x = F.mul(x, c)
            order += 1
            if order > target:
                break
        if order == target:
            return F, c
    if q == 2:
        return field(2, 1), 1
    raise BadParameter(f"no primitive element found for q={q}")


def agl1(q: int) -> perm.PermGroup:
    """Affine maps x -> ax + b on GF(q); generators are the translation by
    one and scaling by the smallest primitive element."""
    if q < 2 or q > 49:
        raise BadParameter("agl1 supports prime powers 2 <= q <= 49")
    F, g = _primitive_element(q)
    shift = perm.Permutation([F.add(x, 1) for x in range(q)])
    if q == 2:
        return perm.PermGroup([shift], name="agl1:2")
    scale = perm.Permutation([F.mul(g, x) for x in range(q)])
    return perm.PermGroup([shift, scale], name=f"agl1:{q}")


def psl2_line(q: int) -> perm.PermGroup:
    """PSL(2, q) on the projective line: points are GF(q) then infinity.

    Generators: x -> x+1, x -> g^2 x (squares of the pinned primitive
    element) and x -> -1/x; together these give the full group for every
    prime power q.
    """
    if q < 3 or q > 49:
        raise BadParameter("psl2 supports prime powers 3 <= q <= 49")
    F, g = _primitive_element(q)
    inf = q
    shift = perm.Permutation([F.add(x, 1) for x in range(q)] + [inf])
    g2 = F.mul(g, g)
    scale = perm.Permutation([F.mul(g2, x) for x in range(q)] + [inf])
    inv_images = [inf] + [F.neg(F.inv(x)) for x in range(1, q)] + [0]
    invol = perm.Permutation(inv_images)
    return perm.PermGroup([shift, scale, invol], name=f"psl2:{q}")


def gl3_flags(q: int) -> perm.PermGroup:
    """GL(3, q) acting on complete flags (line inside plane) of GF(q)^3.

    Points are (line, plane) pairs: lines by echelon representative, planes
    by the normalized functional cutting them out, both in code order.
    The pinned generators are the transvection I + E_{12} and the cyclic
    coordinate shift; for q in {2, 3} they induce the full flag action.
    """
    if q not in (2, 3):
        raise BadParameter("gl3_flags is built in for q in {2, 3}")
    F = field(*_prime_power(q))
    vectors = [(a, b, c) for a in range(q) for b in range(q) for c in range(q)]

    def normalize(v):
        for x in v:
            if x != 0:
                inv = F.inv(x)
                return tuple(F.mul(inv, y) for y in v)
        return None

    lines = sorted({normalize(v) for v in vectors if any(v)})
    planes = lines[:]  # functionals, same normalization
    line_index = {v: i for i, v in enumerate(lines)}
    plane_index = {v: i for i, v in enumerate(planes)}

    def dot(u, v):
        acc = 0
        for a, b in zip(u, v):
            acc = F.add(acc, F.mul(a, b))
        return acc

    flags = [(li, pi) for li, l in enumerate(lines) for pi, f in enumerate(planes)
             if dot(l, f) == 0]
    flag_index = {fl: a for a, fl in enumerate(flags)}

    def act(M: np.ndarray) -> perm.Permutation:
        Minv = linalg.inverse(F, M)
        line_map = {}
        for li, l in enumerate(lines):
            w = linalg.mat_vec(F, M.T, np.array(l, dtype=np.int64))
            line_map[li] = line_index[normalize(tuple(int(x) for x in w))]
        plane_map = {}
        for pi, f in enumerate(planes):
            w = linalg.mat_vec(F, Minv, np.array(f, dtype=np.int64))
            plane_map[pi] = plane_index[normalize(tuple(int(x) for x in w))]
        images = [flag_index[(line_map[li], plane_map[pi])] for (li, pi) in flags]
        return perm.Permutation(images)

    transvection = np.array([[1, 1, 0], [0, 1, 0], [0, 0, 1]], dtype=np.int64)
    shift = np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]], dtype=np.int64)
    return perm.PermGroup([act(transvection), act(shift)], name=f"gl3flags:{q}")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    build: Callable[[], perm.PermGroup]
    note: str

    def group(self) -> perm.PermGroup:
        return self.build()


def _entry(name: str, build: Callable[[], perm.PermGroup], note: str) -> CatalogEntry:
    return CatalogEntry(name, build, note)


def roster() -> list[CatalogEntry]:
    """The default sweep population, in a fixed order."""
    entries: list[CatalogEntry] = []
    for n in (2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 30):
        entries.append(_entry(f"cyclic:{n}", lambda n=n: cyclic(n), "regular cyclic"))
    for n in (3, 4, 5, 6, 7, 8, 9, 10, 12, 15):
        entries.append(_entry(f"dihedral:{n}", lambda n=n: dihedral(n), "dihedral on n points"))
    for n in (3, 4, 5, 6, 7):
        entries.append(_entry(f"sym:{n}", lambda n=n: symmetric_natural(n), "natural symmetric"))
    for n in (4, 5, 6, 7):
        entries.append(_entry(f"alt:{n}", lambda n=n: alternating_natural(n), "natural alternating"))
    for n in (4, 5, 6, 7):
        entries.append(_entry(f"sympairs:{n}", lambda n=n: sym_on_pairs(n), "S_n on 2-subsets"))
    for q in (3, 4, 5, 7, 8, 9, 11):
        entries.append(_entry(f"agl1:{q}", lambda q=q: agl1(q), "1-dim affine group"))
    entries.append(_entry("gl3flags:2", lambda: gl3_flags(2), "GL(3,2) on complete flags"))
    entries.append(_entry("gl3flags:3", lambda: gl3_flags(3), "GL(3,3) on complete flags"))
    for q in (4, 5, 7, 8, 9, 11, 13):
        entries.append(_entry(f"psl2:{q}", lambda q=q: psl2_line(q), "PSL(2,q) on the projective line"))
    return entries


def sweep_groups(max_degree: int = 30) -> Iterator[tuple[str, perm.PermGroup]]:
    for entry in roster():
        G = entry.group()
        if G.degree <= max_degree:
            yield entry.name, G


_BUILTINS: dict[str, Callable[[int], perm.PermGroup]] = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "sym": symmetric_natural,
    "alt": alternating_natural,
    "sympairs": sym_on_pairs,
    "agl1": agl1,
    "gl3flags": gl3_flags,
    "psl2": psl2_line,
}


def builtin(spec_text: str) -> perm.PermGroup:
    """Parse a builtin group spec like ``dihedral:4`` or ``psl2:8``."""
    parts = spec_text.split(":")
    if len(parts) != 2 or parts[0] not in _BUILTINS:
        raise BadParameter(
            f"unknown builtin {spec_text!r}; use one of "
            + ", ".join(f"{k}:n" for k in sorted(_BUILTINS))
        )
    try:
        n = int(parts[1])
    except ValueError as exc:
        raise BadParameter(f"bad parameter in {spec_text!r}") from exc
    return _BUILTINS[parts[0]](n)
