import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import field_elems, laurent_polys, polynomials
from moment_forge.decompose import classify, decompose, min_degree_split, reconstruct
from moment_forge.laurent import LaurentPoly, Polynomial, lp_compose_poly, lp_mul

z = LaurentPoly.monomial(1)
t = Polynomial.x()
ZERO = Polynomial([])


def _r(**kw):
    return [kw.get(f"r{j}", ZERO) for j in range(5)]


def test_split():
    assert min_degree_split(0) == (0, 0)
    assert min_degree_split(-4) == (0, 4)
    assert min_degree_split(-5) == (1, 0)
    assert min_degree_split(-13) == (2, 3)
    with pytest.raises(ValueError):
        min_degree_split(1)


def test_basis_element_decomposes_to_itself(L, basis):
    dec = decompose(basis[3], L, basis)
    assert list(dec.r_polys) == _r(r3=Polynomial([1]))
    assert not dec.remainder


def test_constant_goes_to_r0(L, basis):
    dec = decompose(LaurentPoly.constant(5), L, basis)
    assert list(dec.r_polys) == _r(r0=Polynomial([5]))
    assert not dec.remainder


def test_known_combination(L, basis):
    R = _r(r2=t ** 2 + 1, r4=t)
    Q = reconstruct(R, basis, L)
    dec = decompose(Q, L, basis)
    assert list(dec.r_polys) == R and not dec.remainder


def test_non_solution_leaves_remainder(L, basis, table):
    cls = classify(LaurentPoly.monomial(-1), L, basis, table=table)
    assert not cls.is_solution
    assert cls.decomposition.remainder == -t
    assert "remainder" in cls.witness


def test_solution_classified(L, basis, table):
    Q = basis[1] + lp_mul(L, basis[2])
    cls = classify(Q, L, basis, table=table)
    assert cls.is_solution and cls.report.all_zero


def test_moment_witness_when_remainder_vanishes(L, basis, table):
    # no negative powers and no remainder beyond a constant cannot fail; use a
    # Q that reduces exactly but with a wrong normalization of Q2
    bad = basis[2] + z * 0 + LaurentPoly.monomial(1, 1)
    cls = classify(bad, L, basis, table=table)
    assert not cls.is_solution


def test_basis_validation(L, basis):
    with pytest.raises(ValueError):
        decompose(z, L, basis[:4])
    with pytest.raises(ValueError):
        decompose(z, L, [basis[1]] + list(basis[1:]))


def test_reconstruct_length_check(L, basis):
    with pytest.raises(ValueError):
        reconstruct([ZERO] * 4, basis, L)


@st.composite
def r_lists(draw):
    return [draw(polynomials(max_degree=2)) for _ in range(5)]


@settings(max_examples=25)
@given(r_lists())
def test_roundtrip(R):
    from moment_forge.counterexample import laurent_L, reference_basis

    L, basis = laurent_L(), reference_basis()
    dec = decompose(reconstruct(R, basis, L), L, basis)
    assert list(dec.r_polys) == R and not dec.remainder


@settings(max_examples=25)
@given(r_lists(), r_lists())
def test_injectivity(R, S):
    from moment_forge.counterexample import laurent_L, reference_basis

    L, basis = laurent_L(), reference_basis()
    if R != S:
        assert reconstruct(R, basis, L) != reconstruct(S, basis, L)


@settings(max_examples=40)
@given(laurent_polys(-12, 6, 6))
def test_exactness_on_arbitrary_input(Q):
    from moment_forge.counterexample import laurent_L, reference_basis

    L, basis = laurent_L(), reference_basis()
    dec = decompose(Q, L, basis)
    assert reconstruct(dec.r_polys, basis, L) + dec.remainder.to_laurent() == Q
    assert dec.remainder.coeff(0) == 0
