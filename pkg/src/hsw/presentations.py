"""Rank-2 word algebras K<x,y>/(braid relation, x^2 + x, y^2 + y).

The basis is the set of alternating words of length 0..m with the two
length-m words identified, 2m words in all (m = 2, 3, 4, 6 for the four
Coxeter graphs D2, A2, B2, G2).  Multiplication is by rewriting:

    xx -> -x,   yy -> -y,   (yxy...)_m -> (xyx...)_m

applied leftmost first.  A doubled letter shortens the word and the braid
step is lexicographically decreasing at fixed length (y > x), so the
system terminates; local confluence is not assumed but checked
exhaustively on all words of length <= 2m at build time, which covers
every product of basis words.  Signs multiply by -1 at each squaring
step, so tests over characteristic 3 and 5 exercise them (over GF(2) the
sign is invisible).

The distinguished form t(u, v) reads off the coefficient of the maximal
word in u*v.  For even m (D2, B2, G2) it is nondegenerate, symmetric and
associative; all three properties are checked on the basis rather than
assumed, and A2 is expected to fail at least one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .algebra import FinDimAlgebra
from .gfield import FieldSpec, field
from .linalg import det as field_det

BRAID_LENGTH = {"D2": 2, "A2": 3, "B2": 4, "G2": 6}


@dataclass(frozen=True)
class CoxeterType:
    name: str

    def __post_init__(self):
        if self.name not in BRAID_LENGTH:
            raise ValueError(f"unknown rank-2 type {self.name!r}; choose from {sorted(BRAID_LENGTH)}")

    @property
    def braid_length(self) -> int:
        return BRAID_LENGTH[self.name]

    @property
    def expected_dim(self) -> int:
        return 2 * self.braid_length


def _alternating(first: str, length: int) -> str:
    other = "y" if first == "x" else "x"
    return "".join(first if i % 2 == 0 else other for i in range(length))


def _basis_words(m: int) -> tuple[str, ...]:
    words = [""]
    for length in range(1, m):
        words.append(_alternating("x", length))
        words.append(_alternating("y", length))
    words.append(_alternating("x", m))
    return tuple(words)


class WordAlgebra:
    """One of the four rank-2 presentations over a fixed field."""

    def __init__(self, ctype: CoxeterType, p: int, k: int = 1):
        self.ctype = ctype
        self.spec: FieldSpec = field(p, k)
        m = ctype.braid_length
        self.braid_lhs = _alternating("y", m)
        self.braid_rhs = _alternating("x", m)
        self.basis = _basis_words(m)
        self.index = {w: i for i, w in enumerate(self.basis)}
        self._check_confluence(2 * m)
        n = len(self.basis)
        spec = self.spec
        minus_one = spec.neg(spec.one)
        C = np.zeros((n, n, n), dtype=np.int64)
        for i, u in enumerate(self.basis):
            for j, v in enumerate(self.basis):
                sign, w = self.normal_form(u + v)
                C[i, j, self.index[w]] = spec.one if sign == 1 else minus_one
        unit = np.zeros(n, dtype=np.int64)
        unit[self.index[""]] = spec.one
        labels = tuple(w if w else "1" for w in self.basis)
        self.algebra = FinDimAlgebra(spec, C, unit, labels=labels)

    @property
    def dim(self) -> int:
        return len(self.basis)

    # -- rewriting ----------------------------------------------------

    def _step(self, word: str) -> Optional[tuple[int, str]]:
        """Leftmost applicable rule, or None if the word is reduced."""
        m = len(self.braid_lhs)
        for i in range(len(word)):
            if i + 1 < len(word) and word[i] == word[i + 1]:
                return -1, word[:i] + word[i + 1:]
            if word[i:i + m] == self.braid_lhs:
                return 1, word[:i] + self.braid_rhs + word[i + m:]
        return None

    def normal_form(self, word: str) -> tuple[int, str]:
        """Reduce a word over {x, y}; returns (sign, basis word)."""
        if set(word) - {"x", "y"}:
            raise ValueError(f"word {word!r} is not over the alphabet xy")
        sign = 1
        while True:
            nxt = self._step(word)
            if nxt is None:
                break
            s, word = nxt
            sign *= s
        if word not in self.index:
            raise RuntimeError(f"reduction left a non-basis word {word!r}")
        return sign, word

    def _one_step_rewrites(self, word: str):
        m = len(self.braid_lhs)
        for i in range(len(word)):
            if i + 1 < len(word) and word[i] == word[i + 1]:
                yield -1, word[:i] + word[i + 1:]
            if word[i:i + m] == self.braid_lhs:
                yield 1, word[:i] + self.braid_rhs + word[i + m:]

    def _check_confluence(self, max_len: int) -> None:
        """Every single-step rewrite must agree with the normal form.

        Checking all words up to length 2m suffices: products of basis
        words are that long and rewriting never lengthens a word.
        """
        words = [""]
        for _ in range(max_len):
            words = [w + c for w in words for c in "xy"]
            for w in words:
                s0, nf0 = self.normal_form(w)
                for s, w2 in self._one_step_rewrites(w):
                    s2, nf2 = self.normal_form(w2)
                    if (s * s2, nf2) != (s0, nf0):
                        raise RuntimeError(
                            f"rewriting is not confluent at {w!r}: "
                            f"{(s0, nf0)} vs {(s * s2, nf2)}"
                        )


def build(type_name: str, p: int, k: int = 1) -> WordAlgebra:
    return WordAlgebra(CoxeterType(type_name), p, k)


@dataclass
class FormT:
    gram: np.ndarray
    nondegenerate: bool
    symmetric: bool
    associative: bool
    field: tuple[int, int]

    @property
    def all_three(self) -> bool:
        return self.nondegenerate and self.symmetric and self.associative

    def to_json(self) -> dict:
        return {
            "gram": self.gram.tolist(),
            "nondegenerate": self.nondegenerate,
            "symmetric": self.symmetric,
            "associative": self.associative,
            "field": list(self.field),
        }


def form_t(W: WordAlgebra) -> FormT:
    """Gram matrix of (u, v) -> coefficient of the maximal word in u*v.

    Nondegeneracy, symmetry and associativity are each verified
    exhaustively on the basis.
    """
    spec = W.spec
    A = W.algebra
    top = W.index[W.braid_rhs]
    gram = A.constants[:, :, top]
    nondeg = int(field_det(spec, gram)) != 0
    symmetric = bool(np.array_equal(gram, gram.T))
    if spec.k == 1:
        lhs = np.einsum("ijd,dk->ijk", A.constants, gram) % spec.p
        rhs = np.einsum("jkd,id->ijk", A.constants, gram) % spec.p
        associative = bool(np.array_equal(lhs, rhs))
    else:
        Cc = spec.codes_to_coeffs(A.constants)
        Gc = spec.codes_to_coeffs(gram)
        n = A.dim
        lhs = np.zeros((n, n, n, spec.k), dtype=np.int64)
        rhs = np.zeros((n, n, n, spec.k), dtype=np.int64)
        for d in range(n):
            lhs = (lhs + spec.coeff_mul(Cc[:, :, d][:, :, None, :], Gc[d][None, None, :, :])) % spec.p
            rhs = (rhs + spec.coeff_mul(Cc[:, :, d][None, :, :, :], Gc[:, d][:, None, None, :])) % spec.p
        associative = bool(np.array_equal(lhs, rhs))
    return FormT(gram, nondeg, symmetric, associative, (spec.p, spec.k))
