"""The concrete objects of the construction: L, F1, F2, the Mobius map, and
the reference basis Q0..Q4."""
from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly, Polynomial, parse_laurent
from .numfield import FieldElem

SQRT5 = FieldElem(0, 1, 5)

# L(z) = K (z-1)^6 (z-a)^3 (z-b) / z^5
L_K = FieldElem(Fraction(11, 216), Fraction(5, 216), 5)
L_A = FieldElem(Fraction(-3, 2), Fraction(1, 2), 5)
L_B = FieldElem(Fraction(7, 2), Fraction(-3, 2), 5)

# candidate-form parameters (K, a, b) of F(x) = K x^6 (x-1)^3 (x+1) / (x^2+ax+b)^5
F1_PARAMS = (Fraction(50000, 27), Fraction(4), Fraction(-1))
F2_PARAMS = (Fraction(337500, 161051), Fraction(4, 11), Fraction(-16, 11))

# x = (z-1) / ((2+sqrt5) z - (2-sqrt5)), the inverse of the map sending the
# poles of F1 to 0 and infinity; stored as (alpha, beta, gamma, delta)
INVERSE_MOBIUS = (
    FieldElem(1, 0, 5),
    FieldElem(-1, 0, 5),
    FieldElem(2, 1, 5),
    FieldElem(-2, 1, 5),
)
FORWARD_MOBIUS = (
    FieldElem(2, -1, 5),
    FieldElem(-1, 0, 5),
    FieldElem(2, 1, 5),
    FieldElem(-1, 0, 5),
)

# (1,1,1,1,1,-1,-1,-1,-1,-1): pentagon edges vs pentagram edges
SPLIT_VECTOR = (1, 1, 1, 1, 1, -1, -1, -1, -1, -1)
ORBIT_SIZE = 12

REFERENCE_BASIS_TEXT = (
    "1",
    "(z^2+1)/z",
    "(-(9+4*sqrt(5))*z^4+(20+8*sqrt(5))*z^3+1)/z^2",
    "((47/2+21/2*sqrt(5))*z^6-(195/2+87/2*sqrt(5))*z^5+(255/2+111/2*sqrt(5))*z^4+1)/z^3",
    "(-(9+4*sqrt(5))*z^8+(130+58*sqrt(5))*z^7-(630+282*sqrt(5))*z^6+(910+406*sqrt(5))*z^5+1)/z^4",
)


def laurent_L() -> LaurentPoly:
    z = LaurentPoly.monomial(1)
    num = (z - 1) ** 6 * (z - L_A) ** 3 * (z - L_B)
    return num.scale(L_K).shift(-5)


def L_numerator() -> Polynomial:
    x = Polynomial.x()
    return (x - 1) ** 6 * (x - L_A) ** 3 * (x - L_B) * L_K


def reference_basis() -> list[LaurentPoly]:
    return [parse_laurent(t) for t in REFERENCE_BASIS_TEXT]
