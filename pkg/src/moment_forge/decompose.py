"""Greedy reduction Q -> sum_j (R_j o L) Q_j and the inverse reconstruction."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .laurent import LaurentPoly, Polynomial, lp_compose_poly, lp_mul
from .moments import MomentReport, PowerTable, verify_solution
from .numfield import FieldElem

BASIS_SIZE = 5


@dataclass(frozen=True)
class Decomposition:
    r_polys: tuple[Polynomial, ...]
    remainder: Polynomial
    steps: int = 0


@dataclass(frozen=True)
class Classification:
    is_solution: bool
    decomposition: Decomposition
    report: MomentReport | None = None
    witness: str | None = None


def min_degree_split(m: int) -> tuple[int, int]:
    """``m = -5k - j`` with ``k >= 0`` and ``0 <= j <= 4``."""
    if m > 0:
        raise ValueError(f"min degree must be <= 0, got {m}")
    k, j = divmod(-m, BASIS_SIZE)
    return k, j


@dataclass
class _Reducer:
    L: LaurentPoly
    basis: Sequence[LaurentPoly]
    _powers: list = field(default_factory=list)
    _products: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.basis) != BASIS_SIZE:
            raise ValueError(f"basis must have {BASIS_SIZE} elements")
        for j, q in enumerate(self.basis):
            if not q or q.min_degree != -j:
                raise ValueError(f"basis element {j} must have min degree {-j}")
        if self.L.min_degree != -BASIS_SIZE:
            raise ValueError(f"L must have a pole of order {BASIS_SIZE} at 0")
        self._powers = [LaurentPoly.constant(1, self.L.d)]

    def product(self, k: int, j: int) -> LaurentPoly:
        """``L^k * Q_j`` (cached)."""
        key = (k, j)
        if key not in self._products:
            while len(self._powers) <= k:
                self._powers.append(lp_mul(self._powers[-1], self.L))
            self._products[key] = lp_mul(self._powers[k], self.basis[j])
        return self._products[key]


def decompose(Q: LaurentPoly, L: LaurentPoly, basis: Sequence[LaurentPoly]) -> Decomposition:
    """Strip the lowest term of Q with ``c * L^k * Q_j`` until no negative powers remain.

    Works on any Laurent polynomial.  The constant term left over is folded
    into R_0, so the remainder has only positive powers and vanishes for a
    true solution.
    """
    red = _Reducer(L, basis)
    d = L.d
    coeffs: list[dict[int, FieldElem]] = [{} for _ in range(BASIS_SIZE)]
    cur = Q
    steps = 0
    while cur and cur.min_degree < 0:
        m = cur.min_degree
        k, j = min_degree_split(m)
        P = red.product(k, j)
        c = cur.lowest_coeff() / P.lowest_coeff()
        coeffs[j][k] = coeffs[j].get(k, 0) + c
        cur = cur - P.scale(c)
        assert not cur or cur.min_degree > m, "reduction failed to raise the min degree"
        steps += 1
    remainder = cur.to_polynomial()
    if remainder.coeff(0):
        # constants are solutions: move them into R_0
        coeffs[0][0] = coeffs[0].get(0, 0) + remainder.coeff(0)
        remainder = remainder - remainder.coeff(0)
    r_polys = tuple(
        Polynomial([c.get(k, 0) for k in range(max(c, default=-1) + 1)], d) for c in coeffs
    )
    return Decomposition(r_polys, remainder, steps)


def reconstruct(r_polys: Sequence[Polynomial], basis: Sequence[LaurentPoly], L: LaurentPoly) -> LaurentPoly:
    """``sum_j R_j(L) * Q_j``."""
    if len(r_polys) != len(basis):
        raise ValueError("need one R_j per basis element")
    total = LaurentPoly({}, L.d)
    for R, q in zip(r_polys, basis):
        if R:
            total = total + lp_mul(lp_compose_poly(R, L), q)
    return total


def classify(
    Q: LaurentPoly,
    L: LaurentPoly,
    basis: Sequence[LaurentPoly],
    N: int = 12,
    table: PowerTable | None = None,
) -> Classification:
    dec = decompose(Q, L, basis)
    if dec.remainder:
        return Classification(False, dec, None, f"nonconstant remainder {dec.remainder}")
    report = verify_solution(L, Q, N, table=table)
    if not report.all_zero:
        return Classification(False, dec, report, f"moment {report.first_nonzero_index} is nonzero")
    return Classification(True, dec, report)
