"""Gaussian elimination over exact fields (Fraction or FieldElem entries)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class SingularMatrixError(ArithmeticError):
    pass


@dataclass(frozen=True)
class LinearSystem:
    matrix: tuple[tuple, ...]
    rhs: tuple

    def __post_init__(self):
        if len(self.matrix) != len(self.rhs):
            raise ValueError("rhs length must equal the number of rows")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.matrix), (len(self.matrix[0]) if self.matrix else 0)


def row_echelon(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; pivot = first nonzero entry scanning down a column.

    Returns (reduced rows, pivot column indices).
    """
    # plain ints would fall into float division
    m = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_echelon(rows)[1])


def gauss_solve(system: LinearSystem) -> list:
    """Unique solution of a square system, or :class:`SingularMatrixError`."""
    n, ncols = system.shape
    if n != ncols:
        raise ValueError(f"system is {n}x{ncols}, not square")
    aug = [list(row) + [b] for row, b in zip(system.matrix, system.rhs)]
    red, pivots = row_echelon(aug)
    if pivots != list(range(n)):
        raise SingularMatrixError(f"matrix is singular (pivot columns {pivots})")
    return [red[i][n] for i in range(n)]


def in_span(basis_rows: Sequence[Sequence], v: Sequence) -> bool:
    return rank(list(basis_rows) + [list(v)]) == rank(basis_rows)
