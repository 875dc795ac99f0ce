"""Exact integer row reduction.

Rows are kept fraction-free: combinations are integral and every row is
divided by the gcd of its entries. Arrays start as int64 and are promoted to
Python-int object arrays before any step that could overflow.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np

_LIMIT = 1 << 62


def _primitive(vec: np.ndarray) -> np.ndarray:
    nz = vec[vec != 0]
    if nz.size == 0:
        return vec
    if vec.dtype == object:
        g = 0
        for x in nz:
            g = gcd(g, int(x))
            if g == 1:
                break
    else:
        g = int(np.gcd.reduce(np.abs(nz)))
    if g > 1:
        vec = vec // g
    return vec


def _maxabs(vec: np.ndarray) -> int:
    if vec.size == 0:
        return 0
    if vec.dtype == object:
        return max(abs(int(x)) for x in vec)
    return int(np.abs(vec).max())


class EchelonBasis:
    """Fully reduced integer row basis of a growing set of vectors.

    Each stored row has a pivot (its first nonzero column, made positive) and
    is zero in the pivot columns of every other row, so the square submatrix
    on the pivot columns is diagonal.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []
        self._object = False

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _promote(self) -> None:
        if not self._object:
            self.rows = [r.astype(object) for r in self.rows]
            self._object = True

    def _combine(self, a: int, x: np.ndarray, b: int, y: np.ndarray) -> np.ndarray:
        """a*x - b*y with overflow promotion."""
        if not self._object:
            if abs(a) * _maxabs(x) + abs(b) * _maxabs(y) >= _LIMIT:
                self._promote()
        if self._object:
            x = x.astype(object) if x.dtype != object else x
            y = y.astype(object) if y.dtype != object else y
        return a * x - b * y

    def reduce(self, vec: Sequence[int] | np.ndarray) -> np.ndarray:
        vec = np.asarray(vec, dtype=object if self._object else np.int64)
        for row, p in zip(self.rows, self.pivots):
            coeff = int(vec[p])
            if coeff:
                piv = int(row[p])
                g = gcd(piv, coeff)
                vec = _primitive(self._combine(piv // g, vec, coeff // g, row))
        return vec

    def add(self, vec: Sequence[int] | np.ndarray) -> bool:
        """Insert ``vec``; returns True when it raised the rank."""
        vec = self.reduce(vec)
        nz = np.flatnonzero(vec != 0)
        if nz.size == 0:
            return False
        p = int(nz[0])
        if vec[p] < 0:
            vec = -vec
        vec = _primitive(vec)
        if self._object and vec.dtype != object:
            vec = vec.astype(object)
        for k, row in enumerate(self.rows):
            coeff = int(row[p])
            if coeff:
                piv = int(vec[p])
                g = gcd(piv, coeff)
                new = _primitive(self._combine(piv // g, row, coeff // g, vec))
                if new[self.pivots[k]] < 0:
                    new = -new
                self.rows[k] = new
        if self._object:
            self.rows = [r.astype(object) if r.dtype != object else r for r in self.rows]
        # keep rows ordered by pivot column
        idx = int(np.searchsorted(np.asarray(self.pivots, dtype=np.int64), p))
        self.rows.insert(idx, vec)
        self.pivots.insert(idx, p)
        return True

    def contains(self, vec: Sequence[int] | np.ndarray) -> bool:
        return not np.any(self.reduce(vec) != 0)

    def matrix(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.rows]

    def permuted_trace(self, perm: Sequence[int] | np.ndarray) -> Fraction:
        """Trace of the column permutation ``perm`` on the row space.

        ``perm`` maps column c to column perm[c] and must preserve the row
        space. Writing B P = M B and using the diagonal pivot block D of B,
        M = (B P)[:, pivots] D^{-1}.
        """
        total = Fraction(0)
        for row, p in zip(self.rows, self.pivots):
            total += Fraction(int(row[perm[p]]), int(row[p]))
        return total


def rank(rows: Iterable[Sequence[int]], ncols: int) -> int:
    basis = EchelonBasis(ncols)
    for r in rows:
        basis.add(r)
    return basis.rank


def rank_bareiss(matrix: Sequence[Sequence[int]]) -> int:
    """Rank by textbook Bareiss elimination on Python ints.

    Kept as an independent check on :class:`EchelonBasis`.
    """
    a = [list(map(int, r)) for r in matrix]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == nrows:
            break
    return r
