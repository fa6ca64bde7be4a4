"""Basis solutions Q_0..Q_4 from their normalization.

Q_j = z^-j + s_1 z + ... + s_j z^j, with the coefficients of z^{-j+1}..z^0
equal to zero and the first j moments vanishing.  The j unknowns enter the
moments linearly, which gives a j x j system per basis element.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .laurent import LaurentPoly
from .linalg import LinearSystem, gauss_solve
from .moments import PowerTable, moment_matrix

MAX_J = 4


def build_qj_system(L: LaurentPoly, j: int, table: PowerTable | None = None) -> LinearSystem:
    if not 1 <= j <= MAX_J:
        raise ValueError(f"basis index j must be in 1..{MAX_J}, got {j}")
    table = table if table is not None else PowerTable(L)
    unknowns = [LaurentPoly.monomial(k, 1, L.d) for k in range(1, j + 1)]
    fixed = LaurentPoly.monomial(-j, 1, L.d)
    m = moment_matrix(L, unknowns + [fixed], j, table)
    return LinearSystem(
        tuple(tuple(row[:j]) for row in m),
        tuple(-row[j] for row in m),
    )


def assemble_qj(j: int, solution, d: int) -> LaurentPoly:
    coeffs = {-j: 1}
    coeffs.update({k + 1: s for k, s in enumerate(solution)})
    return LaurentPoly(coeffs, d)


def solve_qj(L: LaurentPoly, j: int, table: PowerTable | None = None) -> LaurentPoly:
    if j == 0:
        return LaurentPoly.constant(1, L.d)
    return assemble_qj(j, gauss_solve(build_qj_system(L, j, table)), L.d)


def solve_basis(L: LaurentPoly, *, workers: int = 1, table: PowerTable | None = None) -> list[LaurentPoly]:
    """[Q_0, ..., Q_4].  A singular system raises SingularMatrixError."""
    table = table if table is not None else PowerTable(L)
    table.power(MAX_J)
    js = range(MAX_J + 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda j: solve_qj(L, j, table), js))
    return [solve_qj(L, j, table) for j in js]
