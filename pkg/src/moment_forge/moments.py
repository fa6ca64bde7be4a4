"""Moments m_i = res(L^i Q') and the finite check that Q solves the moment problem.

The contour integral of ``L^i dQ`` over the unit circle is ``2*pi*i`` times the
coefficient of ``z^-1`` in ``L^i * Q'``, so exact residues decide vanishing.
"""
from __future__ import annotations

import threading
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _kernels
from .laurent import LaurentPoly, _int_form, lp_derivative, lp_mul, lp_pow, lp_residue
from .linalg import rank
from .numfield import FieldElem


@dataclass(frozen=True)
class MomentReport:
    checked_upper_bound: int
    first_nonzero_index: int | None
    all_zero: bool

    def __post_init__(self):
        if self.all_zero != (self.first_nonzero_index is None):
            raise ValueError("all_zero must hold exactly when no nonzero index is recorded")


def moment(L: LaurentPoly, Q: LaurentPoly, i: int) -> FieldElem:
    """Exact ``res(L^i * Q')``; direct (uncached) evaluation."""
    if i < 1:
        raise ValueError("moment index must be >= 1")
    return lp_residue(lp_mul(lp_pow(L, i), lp_derivative(Q)))


class PowerTable:
    """Lazily extended integer powers of L, shared across many moment queries.

    ``L = M / den`` with M over Z[sqrt(d)]; the table holds ``M**i`` as two
    integer lists starting at degree ``i * lo``.  Extension is guarded by a
    lock so the table can serve several threads.
    """

    def __init__(self, L: LaurentPoly):
        if not L:
            raise ValueError("L must be nonzero")
        self.L = L
        self.d = L.d
        self.lo, dense = L.dense()
        self.den, self._mr, self._mi = _int_form(dense)
        self._powers = [([1], [0])]
        self._lock = threading.Lock()

    def power(self, i: int) -> tuple[list[int], list[int]]:
        with self._lock:
            while len(self._powers) <= i:
                pr, pi = self._powers[-1]
                self._powers.append(_kernels.convolve(pr, pi, self._mr, self._mi, self.d))
            return self._powers[i]

    def residue_against(self, i: int, dQ: "_IntLaurent") -> tuple[int, int, int]:
        """Residue of ``L^i * dQ`` as (rat_num, irr_num, den)."""
        pr, pi = self.power(i)
        if not dQ.rev_r:
            return 0, 0, 1
        # coefficient of z^-1: index t of L^i pairs with reversed index k of dQ
        start = -self.lo * i - dQ.lo - len(dQ.rev_r)
        sr, si = _kernels.dot_window(pr, pi, dQ.rev_r, dQ.rev_i, start, self.d)
        return sr, si, self.den ** i * dQ.den

    def moment(self, Q: LaurentPoly, i: int) -> FieldElem:
        sr, si, den = self.residue_against(i, _IntLaurent(lp_derivative(Q)))
        return FieldElem(Fraction(sr, den), Fraction(si, den), self.d)


class _IntLaurent:
    __slots__ = ("lo", "den", "rev_r", "rev_i")

    def __init__(self, f: LaurentPoly):
        self.lo, dense = f.dense()
        self.den, r, i = _int_form(dense)
        self.rev_r = r[::-1]
        self.rev_i = i[::-1]


def moment_bound(Q: LaurentPoly, N: int) -> int:
    """``(N-1) * deg Q + 1`` with ``deg Q = max_degree - min_degree``."""
    if N < 1:
        raise ValueError("orbit size N must be >= 1")
    return (N - 1) * Q.span() + 1


def verify_solution(
    L: LaurentPoly,
    Q: LaurentPoly,
    N: int,
    *,
    table: PowerTable | None = None,
    full_scan: bool = False,
) -> MomentReport:
    """Check m_i = 0 for 1 <= i <= (N-1) deg Q + 1.

    Stops at the first nonzero moment unless ``full_scan`` is set; the report
    always carries the first failing index.
    """
    bound = moment_bound(Q, N)
    table = table if table is not None else PowerTable(L)
    if table.L != L:
        raise ValueError("power table was built for a different L")
    dQ = _IntLaurent(lp_derivative(Q))
    first = None
    for i in range(1, bound + 1):
        sr, si, _ = table.residue_against(i, dQ)
        if sr or si:
            if first is None:
                first = i
            if not full_scan:
                break
    return MomentReport(bound, first, first is None)


def verify_many(
    L: LaurentPoly,
    Qs: Sequence[LaurentPoly],
    N: int,
    *,
    workers: int = 1,
    table: PowerTable | None = None,
) -> list[MomentReport]:
    """Reports for several Q against one L.

    Without a ``table`` the powers of L are streamed: each ``L^i`` is used for
    every pending Q and then dropped, so memory stays at one power.
    """
    if table is None:
        return _verify_streaming(L, Qs, N)
    if workers <= 1 or len(Qs) <= 1:
        return [verify_solution(L, Q, N, table=table) for Q in Qs]
    # the table must be fully extended before threads race on it
    table.power(max(moment_bound(Q, N) for Q in Qs))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda Q: verify_solution(L, Q, N, table=table), Qs))


def _verify_streaming(L: LaurentPoly, Qs: Sequence[LaurentPoly], N: int) -> list[MomentReport]:
    bounds = [moment_bound(Q, N) for Q in Qs]
    dQs = [_IntLaurent(lp_derivative(Q)) for Q in Qs]
    first: list[int | None] = [None] * len(Qs)
    lo, dense = L.dense()
    _, mr, mi = _int_form(dense)
    pr, pi = [1], [0]
    pending = [k for k in range(len(Qs)) if bounds[k] >= 1]
    i = 0
    while pending:
        i += 1
        pr, pi = _kernels.convolve(pr, pi, mr, mi, L.d)
        still = []
        for k in pending:
            dQ = dQs[k]
            if dQ.rev_r:
                start = -lo * i - dQ.lo - len(dQ.rev_r)
                sr, si = _kernels.dot_window(pr, pi, dQ.rev_r, dQ.rev_i, start, L.d)
                if sr or si:
                    first[k] = i
                    continue
            if i < bounds[k]:
                still.append(k)
        pending = still
    return [MomentReport(b, f, f is None) for b, f in zip(bounds, first)]


def orbit_size_N(generators: Iterable, v: Sequence[int]) -> int:
    """Size of the orbit of ``v`` under coordinate permutation by ``<generators>``.

    Generators are :class:`~moment_forge.perm.Permutation` objects (or plain
    0-based image sequences).  A permutation g sends v to w with
    ``w[g(x)] = v[x]``.
    """
    gens = [tuple(getattr(g, "images", g)) for g in generators]
    n = len(v)
    for g in gens:
        if len(g) != n:
            raise ValueError(f"generator of degree {len(g)} acting on a vector of length {n}")
    start = tuple(v)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for g in gens:
            u = [0] * n
            for x in range(n):
                u[g[x]] = w[x]
            u = tuple(u)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen)


def moment_matrix(L: LaurentPoly, columns: Sequence[LaurentPoly], rows: int,
                  table: PowerTable | None = None) -> list[list[FieldElem]]:
    """Entry (i-1, c) is the i-th moment of ``columns[c]``, for 1 <= i <= rows."""
    table = table if table is not None else PowerTable(L)
    dQs = [_IntLaurent(lp_derivative(Q)) for Q in columns]
    out = []
    for i in range(1, rows + 1):
        row = []
        for dQ in dQs:
            sr, si, den = table.residue_against(i, dQ)
            row.append(FieldElem(Fraction(sr, den), Fraction(si, den), L.d))
        out.append(row)
    return out


def polynomial_rigidity_rank(L: LaurentPoly, max_degree: int = 8, rows: int = 89,
                             table: PowerTable | None = None) -> int:
    """Rank of the map span{z^1..z^D} -> (m_1..m_M).

    Full rank D means no nonconstant polynomial of degree <= D satisfies the
    first M moment conditions.
    """
    cols = [LaurentPoly.monomial(k, 1, L.d) for k in range(1, max_degree + 1)]
    return rank(moment_matrix(L, cols, rows, table))
