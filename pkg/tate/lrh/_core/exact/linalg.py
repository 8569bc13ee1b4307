"""
tate.lrh._core.exact.linalg
===========================
Small exact linear algebra over ℚ and ℚ[i]: reduced row echelon form,
nullspace, and an incremental echelon basis for span/rank questions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from tate.lrh._core.exact.scalars import Scalar, coerce

Matrix = List[List[Scalar]]


def rref(matrix: Sequence[Sequence]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = [[coerce(c) for c in row] for row in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = coerce(Fraction(1) / rows[r][col])
        rows[r] = [coerce(c * inv) for c in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [coerce(a - factor * b) for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def nullspace(matrix: Sequence[Sequence]) -> List[List[Scalar]]:
    """Basis of {x : A x = 0}, one vector per free column."""
    reduced, pivots = rref(matrix)
    ncols = len(matrix[0]) if matrix else 0
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec: List[Scalar] = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vec[p] = coerce(-row[f])
        basis.append(vec)
    return basis


def rank(vectors: Sequence[Sequence]) -> int:
    return len(rref(vectors)[1]) if vectors else 0


class EchelonBasis:
    """
    Incrementally maintained echelon basis of a subspace of K^n.

    add() reduces a vector against the stored rows and keeps the remainder
    when it is nonzero, so dimension tracks the rank of everything added.
    """

    def __init__(self, size: int):
        self.size = size
        self._rows: List[Tuple[int, List[Scalar]]] = []

    @property
    def dimension(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Sequence) -> List[Scalar]:
        vec = [coerce(c) for c in vector]
        for pivot, row in self._rows:
            if vec[pivot] != 0:
                factor = vec[pivot]
                vec = [coerce(a - factor * b) for a, b in zip(vec, row)]
        return vec

    def add(self, vector: Sequence) -> bool:
        """Add vector; True if it enlarged the span."""
        vec = self.reduce(vector)
        pivot: Optional[int] = next((i for i, c in enumerate(vec) if c != 0), None)
        if pivot is None:
            return False
        inv = coerce(Fraction(1) / vec[pivot])
        vec = [coerce(c * inv) for c in vec]
        # keep stored rows reduced at the new pivot
        self._rows = [
            (p, [coerce(a - row[pivot] * b) for a, b in zip(row, vec)]) if row[pivot] != 0 else (p, row)
            for p, row in self._rows
        ]
        self._rows.append((pivot, vec))
        return True

    def contains(self, vector: Sequence) -> bool:
        return all(c == 0 for c in self.reduce(vector))
