import pytest

from moment_forge.basis import build_qj_system, solve_basis, solve_qj
from moment_forge.laurent import LaurentPoly, parse_laurent
from moment_forge.numfield import FieldElem


def test_solve_basis_matches_reference(L, basis):
    assert solve_basis(L) == basis


def test_threaded_solve_is_identical(L, basis):
    assert solve_basis(L, workers=4) == basis


def test_individual_reference_values(L):
    q2 = solve_qj(L, 2)
    assert q2 == parse_laurent("(-(9+4*sqrt(5))*z^4+(20+8*sqrt(5))*z^3+1)/z^2")
    q4 = solve_qj(L, 4)
    assert q4.coeff(1) == FieldElem(910, 406)
    assert q4.min_degree == -4 and q4.max_degree == 4


def test_normalization(L):
    for j in range(1, 5):
        q = solve_qj(L, j)
        assert q.coeff(-j) == 1
        assert all(not q.coeff(k) for k in range(-j + 1, 1))


def test_system_shape(L):
    sys_ = build_qj_system(L, 3)
    assert sys_.shape == (3, 3)
    with pytest.raises(ValueError):
        build_qj_system(L, 5)
    with pytest.raises(ValueError):
        build_qj_system(L, 0)


def test_q0_is_one(L):
    assert solve_qj(L, 0) == LaurentPoly.constant(1)
