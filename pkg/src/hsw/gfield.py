"""Exact arithmetic in GF(p) and GF(p^k).

Field elements are encoded as integers 0..p^k-1: the base-p digits of the
code are the coefficients (low degree first) of the residue polynomial
modulo a fixed monic irreducible.  The modulus is always the
lexicographically smallest monic irreducible of its degree, scanning
coefficient vectors in increasing integer encoding, so every downstream
certificate is reproducible byte for byte.

Three regimes share one code-level API:

* k == 1: plain residue arithmetic;
* small fields (q <= TABLE_LIMIT): q x q lookup tables, also consumed by
  the vectorized linear-algebra kernels;
* large fields (used by randomized identity testing): polynomial
  arithmetic on coefficient vectors, with a precomputed reduction matrix
  so batched numpy operations stay exact.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .errors import NotPrime

TABLE_LIMIT = 1024
EMBED_SCAN_LIMIT = 65536


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ------------------------------------------------------------------
# dense polynomial arithmetic over F_p (coefficient lists, low first)
# ------------------------------------------------------------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_divmod(prod, mod, p)[1]


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, p - 2, p)
    quo = [0] * max(len(a) - db, 0)
    while len(_poly_trim(a)) - 1 >= db and a:
        shift = len(a) - 1 - db
        c = (a[-1] * inv_lb) % p
        quo[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _poly_trim(a)
    return quo, a


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _poly_powmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    b = _poly_divmod(list(base), mod, p)[1]
    while e:
        if e & 1:
            result = _poly_mulmod(result, b, mod, p)
        b = _poly_mulmod(b, b, mod, p)
        e >>= 1
    return result


def _frobenius_power_minus_x(j: int, f: Sequence[int], p: int) -> list[int]:
    """x^(p^j) - x reduced mod f, as a coefficient list."""
    xq = _poly_powmod([0, 1], p ** j, f, p)
    diff = list(xq) + [0] * max(0, 2 - len(xq))
    diff[1] = (diff[1] - 1) % p
    return _poly_trim(diff)


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin test: x^(p^k) = x mod f, and gcds at the maximal subfields."""
    k = len(f) - 1
    if k == 1:
        return True
    if _frobenius_power_minus_x(k, f, p):
        return False
    for r in sorted({d for d in range(2, k + 1) if k % d == 0 and is_prime(d)}):
        g = _poly_gcd(_frobenius_power_minus_x(k // r, f, p), f, p)
        if len(g) - 1 != 0:
            return False
    return True


class FieldSpec:
    """An explicit GF(p^k) with a pinned monic irreducible modulus."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if k < 1 or len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if k > 1 and not _is_irreducible(list(modulus), p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = tuple(c % p for c in modulus)
        self._tables: Optional[tuple[np.ndarray, ...]] = None
        self._red: Optional[np.ndarray] = None

    # -- encoding ---------------------------------------------------

    def encode(self, coeffs: Sequence[int]) -> int:
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + (c % self.p)
        return code

    def decode(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    # -- scalar arithmetic on codes ----------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self.encode([x + y for x, y in zip(self.decode(a), self.decode(b))])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self.encode([-x for x in self.decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        pa = _poly_trim(list(self.decode(a)))
        pb = _poly_trim(list(self.decode(b)))
        if not pa or not pb:
            return 0
        return self.encode(_poly_mulmod(pa, pb, list(self.modulus), self.p) + [0] * self.k)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        """Reduce an integer into the prime subfield."""
        return n % self.p

    def elements(self) -> range:
        return range(self.q)

    def elem(self, code: int) -> "FieldElem":
        return FieldElem(self, code % self.q)

    # -- lookup tables (small fields) ---------------------------------

    def tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """(ADD, MUL, NEG, INV) lookup tables; INV[0] is 0 by convention."""
        if self.q > TABLE_LIMIT:
            raise ValueError(f"field of size {self.q} exceeds table limit {TABLE_LIMIT}")
        if self._tables is None:
            q = self.q
            if self.k == 1:
                idx = np.arange(q, dtype=np.int64)
                add = (idx[:, None] + idx[None, :]) % q
                mul = (idx[:, None] * idx[None, :]) % q
                neg = (-idx) % q
            else:
                digits = np.array([self.decode(c) for c in range(q)], dtype=np.int64)
                add = np.zeros((q, q), dtype=np.int64)
                weights = self.p ** np.arange(self.k, dtype=np.int64)
                summed = (digits[:, None, :] + digits[None, :, :]) % self.p
                add = summed @ weights
                mul = np.zeros((q, q), dtype=np.int64)
                for a in range(q):
                    for b in range(a, q):
                        v = self.mul(a, b)
                        mul[a, b] = v
                        mul[b, a] = v
                neg = np.array([self.neg(a) for a in range(q)], dtype=np.int64)
            inv = np.zeros(q, dtype=np.int64)
            for a in range(1, q):
                inv[a] = self.inv(a)
            self._tables = (add.astype(np.int64), mul.astype(np.int64), neg, inv)
        return self._tables

    # -- coefficient-vector path (large fields) ------------------------

    def reduction_matrix(self) -> np.ndarray:
        """(2k-1, k) matrix sending conv coefficients to reduced coefficients."""
        if self._red is None:
            k, p, mod = self.k, self.p, list(self.modulus)
            rows = []
            for j in range(2 * k - 1):
                xj = [0] * j + [1]
                rem = _poly_divmod(xj, mod, p)[1]
                rows.append(rem + [0] * (k - len(rem)))
            self._red = np.array(rows, dtype=np.int64)
        return self._red

    def coeff_mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise (broadcast) product of coefficient arrays (..., k)."""
        k = self.k
        if k == 1:
            return (a * b) % self.p
        shape = np.broadcast_shapes(a.shape, b.shape)[:-1]
        conv = np.zeros(shape + (2 * k - 1,), dtype=np.int64)
        for i in range(k):
            conv[..., i : i + k] += a[..., i : i + 1] * b
            conv[..., i : i + k] %= self.p
        return (conv @ self.reduction_matrix()) % self.p

    def codes_to_coeffs(self, codes: np.ndarray) -> np.ndarray:
        codes = np.asarray(codes, dtype=np.int64)
        out = np.empty(codes.shape + (self.k,), dtype=np.int64)
        rest = codes.copy()
        for i in range(self.k):
            out[..., i] = rest % self.p
            rest //= self.p
        return out

    def coeffs_to_codes(self, coeffs: np.ndarray) -> np.ndarray:
        weights = self.p ** np.arange(self.k, dtype=np.int64)
        return (np.asarray(coeffs, dtype=np.int64) % self.p) @ weights

    # -- misc -----------------------------------------------------------

    def format_code(self, code: int) -> str:
        if self.k == 1:
            return str(code)
        names = {0: "1", 1: "a"}
        terms = []
        for i, c in enumerate(self.decode(code)):
            if c == 0:
                continue
            base = names.get(i, f"a^{i}")
            terms.append(base if (c == 1 and i > 0) else (str(c) if i == 0 else f"{c}*{base}"))
        return "+".join(terms) if terms else "0"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"


class FieldElem:
    """Thin operator wrapper over a FieldSpec code."""

    __slots__ = ("spec", "code")

    def __init__(self, spec: FieldSpec, code: int):
        self.spec = spec
        self.code = code % spec.q

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.decode(self.code)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.spec != self.spec:
                raise ValueError("field mismatch")
            return other.code
        if isinstance(other, int):
            return other % self.spec.p
        return NotImplemented

    def __add__(self, other):
        return FieldElem(self.spec, self.spec.add(self.code, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.spec, self.spec.sub(self.code, self._coerce(other)))

    def __mul__(self, other):
        return FieldElem(self.spec, self.spec.mul(self.code, self._coerce(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(self.spec, self.spec.neg(self.code))

    def __truediv__(self, other):
        return FieldElem(self.spec, self.spec.mul(self.code, self.spec.inv(self._coerce(other))))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.spec, self.spec.inv(self.code))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.code == other % self.spec.p if other else self.code == 0
        return (
            isinstance(other, FieldElem)
            and self.spec == other.spec
            and self.code == other.code
        )

    def __hash__(self) -> int:
        return hash((self.spec, self.code))

    def __repr__(self) -> str:
        return f"{self.spec.format_code(self.code)} in {self.spec!r}"


@lru_cache(maxsize=None)
def field(p: int, k: int = 1) -> FieldSpec:
    """GF(p^k) with the lexicographically smallest monic irreducible modulus.

    Low coefficient vectors are scanned in increasing integer encoding
    (c_0 + c_1*p + ...), so the choice is deterministic.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if k == 1:
        return FieldSpec(p, 1, (0, 1))
    for enc in range(p ** k):
        coeffs = []
        rest = enc
        for _ in range(k):
            coeffs.append(rest % p)
            rest //= p
        f = coeffs + [1]
        if f[0] == 0:
            continue  # divisible by x
        if _is_irreducible(f, p):
            return FieldSpec(p, k, tuple(f))
    raise RuntimeError("unreachable: irreducibles of every degree exist")


def min_extension(p: int, lower_bound: int, multiple_of: int = 1) -> FieldSpec:
    """Smallest GF(p^k) with q >= lower_bound and multiple_of | k."""
    k = multiple_of
    while p ** k < lower_bound:
        k += multiple_of
    return field(p, k)


def embed_codes(src: FieldSpec, dst: FieldSpec) -> np.ndarray:
    """Code map for the field embedding GF(p^k) -> GF(p^k'), k | k'.

    The image of the source generator is the smallest root (by code order)
    of the source modulus inside dst, found by exhaustive scan; dst must
    therefore have at most EMBED_SCAN_LIMIT elements unless src is a prime
    field, in which case the embedding is the identity on 0..p-1.
    """
    if src.p != dst.p:
        raise ValueError("embeddings require equal characteristic")
    if dst.k % src.k != 0:
        raise ValueError(f"GF({src.p}^{src.k}) does not embed in GF({dst.p}^{dst.k})")
    if src.k == 1:
        return np.arange(src.q, dtype=np.int64)
    if dst.q > EMBED_SCAN_LIMIT:
        raise ValueError(f"embedding target of size {dst.q} exceeds scan limit")
    root = None
    for cand in range(dst.q):
        acc = 0
        for c in reversed(src.modulus):
            acc = dst.add(dst.mul(acc, cand), c % dst.p)
        if acc == 0:
            root = cand
            break
    if root is None:
        raise RuntimeError("no root found; modulus or degrees inconsistent")
    powers = [1]
    for _ in range(src.k - 1):
        powers.append(dst.mul(powers[-1], root))
    table = np.zeros(src.q, dtype=np.int64)
    for code in range(src.q):
        acc = 0
        for c, w in zip(src.decode(code), powers):
            acc = dst.add(acc, dst.mul(c % dst.p, w))
        table[code] = acc
    return table
