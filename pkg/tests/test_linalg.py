from fractions import Fraction

import pytest

from moment_forge.linalg import LinearSystem, SingularMatrixError, gauss_solve, in_span, rank, row_echelon
from moment_forge.numfield import FieldElem


def test_solve_small_system():
    sys_ = LinearSystem(((2, 1), (1, 3)), (3, 5))
    assert gauss_solve(sys_) == [Fraction(4, 5), Fraction(7, 5)]


def test_solve_over_quadratic_field():
    s = FieldElem(0, 1)
    sys_ = LinearSystem(((s, 1), (1, s)), (1, 0))
    x, y = gauss_solve(sys_)
    assert s * x + y == 1 and x + s * y == 0


def test_singular():
    with pytest.raises(SingularMatrixError):
        gauss_solve(LinearSystem(((1, 2), (2, 4)), (1, 2)))


def test_rank_and_span():
    rows = [(1, 2, 3), (2, 4, 6), (0, 1, 1)]
    assert rank(rows) == 2
    assert in_span(rows, (1, 3, 4))
    assert not in_span(rows, (0, 0, 1))
    rref, piv = row_echelon(rows)
    assert piv == [0, 1]


def test_shape_check():
    with pytest.raises(ValueError):
        LinearSystem(((1, 2),), (1, 2))
