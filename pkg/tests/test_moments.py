import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import laurent_polys
from moment_forge.counterexample import SPLIT_VECTOR
from moment_forge.laurent import LaurentPoly, Polynomial, lp_compose_poly, lp_derivative, lp_mul, lp_pow, lp_residue
from moment_forge.moments import (
    MomentReport,
    moment,
    moment_bound,
    orbit_size_N,
    polynomial_rigidity_rank,
    verify_many,
    verify_solution,
)
from moment_forge.numfield import FieldElem
from moment_forge.perm import Permutation, monodromy_generators

z = LaurentPoly.monomial(1)


def test_moment_examples(L, basis):
    for i in (1, 2, 7):
        assert moment(L, basis[0], i) == 0
    assert moment(L, basis[2], 1) == 0
    # L' = 1 at i = 1: the z^-1 coefficient of L
    assert moment(L, z, 1) == L.coeff(-1) != 0
    with pytest.raises(ValueError):
        moment(L, z, 0)


def test_table_agrees_with_direct_moments(L, basis, table):
    Q = basis[3] + z ** 2
    for i in (1, 5, 13):
        assert table.moment(Q, i) == moment(L, Q, i)


def test_bound_uses_span():
    assert moment_bound(LaurentPoly.constant(1), 12) == 1
    assert moment_bound(LaurentPoly({-4: 1, 4: 1}), 12) == 89
    with pytest.raises(ValueError):
        moment_bound(z, 0)


def test_basis_elements_verify(L, basis, table):
    bounds = []
    for Q in basis:
        rep = verify_solution(L, Q, 12, table=table)
        assert rep.all_zero and rep.first_nonzero_index is None
        bounds.append(rep.checked_upper_bound)
    assert bounds == [1, 23, 45, 67, 89]


def test_non_solution_reports_first_index(L, table):
    rep = verify_solution(L, z + z ** 2, 12, table=table)
    assert not rep.all_zero and rep.first_nonzero_index == 1


def test_full_scan_keeps_first_index(L, table):
    rep = verify_solution(L, z ** 3, 4, table=table, full_scan=True)
    assert rep.first_nonzero_index == 1


def test_table_for_other_L_rejected(table):
    with pytest.raises(ValueError):
        verify_solution(z ** 2 + LaurentPoly.monomial(-1), z, 3, table=table)


def test_report_invariant():
    with pytest.raises(ValueError):
        MomentReport(5, None, False)
    with pytest.raises(ValueError):
        MomentReport(5, 2, True)


def test_verify_many_streaming_matches_table(L, basis, table):
    Qs = list(basis) + [z + z ** 2, LaurentPoly.monomial(-2), LaurentPoly()]
    streamed = verify_many(L, Qs, 12)
    tabled = verify_many(L, Qs, 12, table=table, workers=3)
    assert streamed == tabled
    assert [r.all_zero for r in streamed] == [True] * 5 + [False, False, True]


def test_step_two_closure(L, basis):
    # L^k Q_j is again a solution; streamed so the powers are not all kept
    Qs = [lp_mul(lp_compose_poly(Polynomial.x() ** k, L), basis[j]) for j in range(5) for k in range(4)]
    reports = verify_many(L, Qs, 12)
    assert all(r.all_zero for r in reports)
    assert max(r.checked_upper_bound for r in reports) == 11 * (10 * 3 + 8) + 1


def test_rigidity_rank(L, table):
    assert polynomial_rigidity_rank(L, 8, 89, table) == 8


@settings(max_examples=15)
@given(st.integers(1, 4), st.integers(1, 3), laurent_polys(-3, 3, 3))
def test_product_rule_identity_for_moments(i, k, Q):
    from moment_forge.counterexample import laurent_L

    L = laurent_L()
    # res((L^(i+k) Q)') = 0 expanded by the product rule
    Lik = lp_pow(L, i + k)
    lhs = lp_residue(lp_mul(lp_derivative(Lik), Q)) + lp_residue(lp_mul(Lik, lp_derivative(Q)))
    assert lhs == 0


def test_orbit_examples():
    gens = list(monodromy_generators().values())
    assert orbit_size_N(gens, SPLIT_VECTOR) == 12
    assert orbit_size_N([Permutation.identity(10)], SPLIT_VECTOR) == 1
    s10 = [Permutation.from_cycles("(1,2)", 10), Permutation.from_cycles("(1,2,3,4,5,6,7,8,9,10)", 10)]
    assert orbit_size_N(s10, SPLIT_VECTOR) == 252
    with pytest.raises(ValueError):
        orbit_size_N([Permutation.identity(5)], SPLIT_VECTOR)
