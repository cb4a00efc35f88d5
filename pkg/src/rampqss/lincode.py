"""Linear codes over F_p: polynomial-evaluation codes, duals, shortening,
puncturing, and brute-force minimum distance.

The two code families built here are the evaluation code of all
polynomials of degree < k at n distinct nonzero points (``build_c1``) and
its subcode from polynomials whose low-order L coefficients vanish
(``build_c2``). Generators are canonicalized to reduced row echelon form
so code equality is plain matrix equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import BudgetExceededError
from .gfp import Matrix, all_vectors, check_modulus

ENUMERATION_BUDGET = 10**7


@dataclass(frozen=True)
class SchemeParams:
    """Parameters (p, k, L, n, alphas) of one ramp-scheme instance.

    n is always derived as 2k - L. alphas defaults to (1, ..., n) and must
    consist of distinct nonzero elements of F_p.
    """

    p: int
    k: int
    L: int
    alphas: tuple[int, ...] = ()

    def __post_init__(self):
        p = check_modulus(self.p)
        object.__setattr__(self, "p", p)
        if not (isinstance(self.k, (int, np.integer)) and isinstance(self.L, (int, np.integer))):
            raise ValueError("k and L must be integers")
        object.__setattr__(self, "k", int(self.k))
        object.__setattr__(self, "L", int(self.L))
        if not 1 <= self.L <= self.k:
            raise ValueError(f"invariant 1 <= L <= k violated: L = {self.L}, k = {self.k}")
        n = 2 * self.k - self.L
        if n >= p:
            raise ValueError(f"invariant n = 2k - L < p violated: n = {n}, p = {p}")
        alphas = tuple(int(a) % p for a in self.alphas) or tuple(range(1, n + 1))
        if len(alphas) != n:
            raise ValueError(f"expected {n} evaluation points, got {len(alphas)}")
        if any(a == 0 for a in alphas):
            raise ValueError("evaluation points must be nonzero")
        if len(set(alphas)) != n:
            raise ValueError("evaluation points must be pairwise distinct")
        object.__setattr__(self, "alphas", alphas)

    @property
    def n(self) -> int:
        return 2 * self.k - self.L

    def __str__(self) -> str:
        return f"(p={self.p}, k={self.k}, L={self.L}, n={self.n}, alphas={self.alphas})"


class LinearCode:
    """A subspace of F_p^m given by a generator matrix in canonical rref form."""

    __slots__ = ("generator", "p")

    def __init__(self, generator, p: int | None = None):
        if isinstance(generator, Matrix):
            mat = generator
            if p is not None and p != mat.p:
                raise ValueError(f"modulus mismatch: {p} vs {mat.p}")
        else:
            if p is None:
                raise ValueError("modulus required when building from raw entries")
            mat = Matrix(generator, p)
        reduced, rank, _ = mat.rref()
        canonical = reduced.array[:rank].reshape(rank, mat.cols)
        self.generator = Matrix(canonical, mat.p)
        self.p = mat.p

    @classmethod
    def zero(cls, length: int, p: int) -> "LinearCode":
        return cls(Matrix.zeros(0, length, p))

    @classmethod
    def full(cls, length: int, p: int) -> "LinearCode":
        return cls(Matrix.identity(length, p))

    @property
    def length(self) -> int:
        return self.generator.cols

    @property
    def dim(self) -> int:
        return self.generator.rows

    def contains(self, vector) -> bool:
        """Membership test via rank comparison."""
        v = np.mod(np.asarray(vector, dtype=np.int64), self.p).reshape(1, -1)
        if v.shape[1] != self.length:
            raise ValueError(f"vector length {v.shape[1]} != code length {self.length}")
        stacked = Matrix(np.vstack([self.generator.array, v]), self.p)
        return stacked.rank() == self.dim

    def codewords(self) -> np.ndarray:
        """All p^dim codewords as rows (budget-guarded)."""
        if self.p**self.dim > ENUMERATION_BUDGET:
            raise BudgetExceededError(
                f"p^dim = {self.p}^{self.dim} exceeds the enumeration budget"
            )
        msgs = all_vectors(self.p, self.dim)
        return (msgs @ self.generator.array) % self.p

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.p == other.p and self.generator == other.generator

    def __hash__(self) -> int:
        return hash(self.generator)

    def __repr__(self) -> str:
        return f"LinearCode(p={self.p}, length={self.length}, dim={self.dim})"


def vandermonde_rows(params: SchemeParams) -> Matrix:
    """Raw k x n evaluation matrix with row j = (alpha_i^j) for j = 0..k-1."""
    a = np.array(params.alphas, dtype=np.int64)
    rows = np.empty((params.k, params.n), dtype=np.int64)
    rows[0] = 1
    for j in range(1, params.k):
        rows[j] = (rows[j - 1] * a) % params.p
    return Matrix(rows, params.p)


def build_c1(params: SchemeParams) -> LinearCode:
    """Evaluation code of all polynomials of degree < k; dimension k."""
    return LinearCode(vandermonde_rows(params))


def build_c2(params: SchemeParams) -> LinearCode:
    """Subcode from polynomials with vanishing low-order L coefficients;
    dimension k - L, contained in the code from ``build_c1``."""
    rows = vandermonde_rows(params).array[params.L :]
    return LinearCode(Matrix(rows.reshape(params.k - params.L, params.n), params.p))


def dual(code: LinearCode) -> LinearCode:
    """Euclidean dual code; dimension length - dim."""
    if code.dim == 0:
        return LinearCode.full(code.length, code.p)
    return LinearCode(code.generator.nullspace())


def _coord_indices(j: Iterable[int], length: int) -> list[int]:
    idx = sorted({int(i) for i in j})
    if idx and (idx[0] < 1 or idx[-1] > length):
        raise ValueError(f"coordinates {idx} out of range 1..{length}")
    return [i - 1 for i in idx]


def shorten(code: LinearCode, j: Iterable[int]) -> LinearCode:
    """Subcode of words vanishing on the 1-based coordinate set j.

    The result keeps the original length; the selected coordinates are
    forced to zero rather than deleted.
    """
    idx = _coord_indices(j, code.length)
    if not idx or code.dim == 0:
        return LinearCode(code.generator)
    cols = code.generator.take_columns(idx)
    combos = cols.transpose().nullspace().nonzero_rows()
    if combos.rows == 0:
        return LinearCode.zero(code.length, code.p)
    return LinearCode(combos @ code.generator)


def puncture(code: LinearCode, j: Iterable[int]) -> LinearCode:
    """Code with the 1-based coordinates in j deleted; length shrinks by |j|."""
    idx = _coord_indices(j, code.length)
    keep = [c for c in range(code.length) if c not in idx]
    if code.dim == 0:
        return LinearCode.zero(len(keep), code.p)
    return LinearCode(code.generator.take_columns(keep))


def min_distance(code: LinearCode, budget: int = ENUMERATION_BUDGET) -> int:
    """Minimum Hamming weight over all nonzero codewords, by exhaustion."""
    if code.dim < 1:
        raise ValueError("minimum distance is undefined for the zero code")
    total = code.p**code.dim
    if total > budget:
        raise BudgetExceededError(
            f"enumerating {total} codewords exceeds the budget {budget}"
        )
    gen = code.generator.array
    best = code.length
    chunk = 1 << 16
    msgs = all_vectors(code.p, code.dim)
    for start in range(0, total, chunk):
        block = msgs[start : start + chunk]
        words = (block @ gen) % code.p
        weights = np.count_nonzero(words, axis=1)
        if start == 0:
            weights = weights[1:]  # skip the zero message
        if weights.size:
            best = min(best, int(weights.min()))
    return best
