"""Exact arithmetic and dense linear algebra over prime fields F_p.

Elements are machine integers reduced modulo p after every operation;
moduli are restricted to small primes (p < 2**16) so no bignum support
is needed. Everything here is a pure function on immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

MAX_MODULUS = 1 << 16


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Trial-division primality test for small n."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_modulus(p: int) -> int:
    """Return p if it is a supported prime modulus, else raise ValueError."""
    if not isinstance(p, (int, np.integer)):
        raise ValueError(f"modulus must be an integer, got {type(p).__name__}")
    p = int(p)
    if not is_prime(p):
        raise ValueError(f"modulus p = {p} is not prime")
    if p >= MAX_MODULUS:
        raise ValueError(f"modulus p = {p} exceeds the supported bound {MAX_MODULUS}")
    return p


@dataclass(frozen=True)
class FieldElement:
    """An element of F_p, stored as an integer in [0, p)."""

    value: int
    p: int

    def __post_init__(self):
        p = check_modulus(self.p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", int(self.value) % p)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
            return other
        if isinstance(other, (int, np.integer)):
            return FieldElement(int(other), self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement((self.value + other.value) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement((self.value - other.value) % self.p, self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement((self.value * other.value) % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.p)

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse via Fermat's little theorem."""
        if self.value == 0:
            raise ZeroDivisionError(f"zero has no inverse in F_{self.p}")
        return FieldElement(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldElement(pow(self.value, exponent, self.p), self.p)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"F{self.p}({self.value})"


def poly_eval(coeffs: Sequence[FieldElement], x: FieldElement) -> FieldElement:
    """Evaluate c_1 + c_2 x + ... + c_m x^(m-1) by Horner's rule.

    coeffs[0] is the constant term.
    """
    if len(coeffs) == 0:
        raise ValueError("poly_eval requires a nonempty coefficient vector")
    p = x.p
    for c in coeffs:
        if not isinstance(c, FieldElement):
            raise ValueError("coefficients must be FieldElement values")
        if c.p != p:
            raise ValueError(f"modulus mismatch: {c.p} vs {p}")
    acc = FieldElement(0, p)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def mod_inverse(a: int, p: int) -> int:
    """Inverse of a nonzero residue modulo the prime p."""
    a = a % p
    if a == 0:
        raise ZeroDivisionError(f"zero has no inverse in F_{p}")
    return pow(a, p - 2, p)


class Matrix:
    """A dense matrix over F_p.

    Entries are stored as a read-only int64 numpy array, reduced mod p.
    All operations return fresh matrices; instances never mutate.
    """

    __slots__ = ("_a", "p")

    def __init__(self, entries, p: int):
        p = check_modulus(p)
        a = np.array(entries, dtype=np.int64)
        if a.ndim == 1:
            a = a.reshape(1, -1)
        if a.ndim != 2:
            raise ValueError(f"matrix entries must be 2-D, got ndim={a.ndim}")
        a = np.mod(a, p)
        a.setflags(write=False)
        self._a = a
        self.p = p

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "Matrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, n: int, p: int) -> "Matrix":
        return cls(np.eye(n, dtype=np.int64), p)

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    def to_array(self) -> np.ndarray:
        """Writable copy of the entries."""
        return self._a.copy()

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the entries."""
        return self._a

    def row(self, i: int) -> np.ndarray:
        return self._a[i].copy()

    def take_columns(self, idx: Sequence[int]) -> "Matrix":
        return Matrix(self._a[:, list(idx)], self.p)

    def transpose(self) -> "Matrix":
        return Matrix(self._a.T, self.p)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.p != self.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
        return Matrix((self._a @ other._a) % self.p, self.p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.p == other.p
            and self.shape == other.shape
            and bool(np.array_equal(self._a, other._a))
        )

    def __hash__(self) -> int:
        return hash((self.p, self.shape, self._a.tobytes()))

    def __repr__(self) -> str:
        return f"Matrix(p={self.p}, shape={self.shape})\n{self._a}"

    def rref(self) -> tuple["Matrix", int, list[int]]:
        """Reduced row echelon form.

        Returns (reduced matrix, rank, pivot column indices). The row
        space is preserved and the result is idempotent under rref.
        """
        a = self.to_array()
        p = self.p
        pivots: list[int] = []
        r = 0
        for c in range(a.shape[1]):
            if r == a.shape[0]:
                break
            nz = np.nonzero(a[r:, c])[0]
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                a[[r, i]] = a[[i, r]]
            a[r] = (a[r] * mod_inverse(int(a[r, c]), p)) % p
            others = np.nonzero(a[:, c])[0]
            for j in others:
                if j != r:
                    a[j] = (a[j] - a[j, c] * a[r]) % p
            pivots.append(c)
            r += 1
        return Matrix(a, p), r, pivots

    def rank(self) -> int:
        return self.rref()[1]

    def nullspace(self) -> "Matrix":
        """Basis of the right kernel {x : self @ x^T = 0}, one vector per row.

        Returns a (cols - rank) x cols matrix; zero rows mean a trivial kernel.
        """
        reduced, rank, pivots = self.rref()
        n = self.cols
        free = [c for c in range(n) if c not in pivots]
        basis = np.zeros((len(free), n), dtype=np.int64)
        a = reduced.array
        for row_idx, f in enumerate(free):
            basis[row_idx, f] = 1
            for r, c in enumerate(pivots):
                basis[row_idx, c] = (-a[r, f]) % self.p
        return Matrix(basis.reshape(len(free), n), self.p)

    def nonzero_rows(self) -> "Matrix":
        mask = np.any(self._a != 0, axis=1)
        return Matrix(self._a[mask].reshape(int(mask.sum()), self.cols), self.p)


def vstack(matrices: Sequence[Matrix]) -> Matrix:
    """Stack matrices over a common modulus row-wise."""
    if not matrices:
        raise ValueError("vstack requires at least one matrix")
    p = matrices[0].p
    for m in matrices:
        if m.p != p:
            raise ValueError(f"modulus mismatch: {p} vs {m.p}")
    return Matrix(np.vstack([m.array for m in matrices]), p)


def solve(a: Matrix, b: Sequence[int]) -> tuple[np.ndarray, Matrix]:
    """Solve a @ x = b over F_p.

    Returns (particular solution, kernel basis matrix). Raises ValueError
    when the system is inconsistent.
    """
    rhs = np.mod(np.asarray(b, dtype=np.int64), a.p).reshape(-1, 1)
    if rhs.shape[0] != a.rows:
        raise ValueError(f"rhs length {rhs.shape[0]} does not match {a.rows} rows")
    aug = Matrix(np.hstack([a.array, rhs]), a.p)
    reduced, rank, pivots = aug.rref()
    if a.cols in pivots:
        raise ValueError("inconsistent linear system over F_p")
    x = np.zeros(a.cols, dtype=np.int64)
    red = reduced.array
    for r, c in enumerate(pivots):
        x[c] = red[r, a.cols]
    return x, a.nullspace()


@lru_cache(maxsize=32)
def all_vectors(p: int, m: int) -> np.ndarray:
    """All p^m vectors of F_p^m in lexicographic order, leftmost digit most
    significant. The returned array is cached and read-only."""
    check_modulus(p)
    if m < 0:
        raise ValueError("vector length must be nonnegative")
    count = p**m
    idx = np.arange(count, dtype=np.int64)
    powers = p ** np.arange(m - 1, -1, -1, dtype=np.int64)
    digits = (idx[:, None] // powers[None, :]) % p if m else np.zeros((1, 0), np.int64)
    digits.setflags(write=False)
    return digits


def vectors_to_indices(vectors: np.ndarray, p: int) -> np.ndarray:
    """Map rows of digit vectors to their lexicographic indices (base-p,
    leftmost digit most significant)."""
    vectors = np.asarray(vectors, dtype=np.int64) % p
    m = vectors.shape[-1]
    powers = p ** np.arange(m - 1, -1, -1, dtype=np.int64)
    return vectors @ powers
