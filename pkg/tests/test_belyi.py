from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from moment_forge.belyi import (
    DegenerateCandidateError,
    Mobius,
    NotBelyiError,
    RationalFunction,
    build_candidate,
    decompose_laurent_form,
    h_structure,
    laurent_as_rational,
    mobius_substitute,
    p_of,
    ramification_profile,
)
from moment_forge.counterexample import (
    F1_PARAMS,
    F2_PARAMS,
    FORWARD_MOBIUS,
    INVERSE_MOBIUS,
    L_A,
    L_B,
    L_K,
    laurent_L,
)
from moment_forge.laurent import Polynomial, poly_divexact, poly_gcd
from moment_forge.numfield import FieldElem

x = Polynomial.x()
S5 = FieldElem(0, 1)
PROFILE = {"over_zero": [6, 3, 1], "over_one": [2, 2, 2, 1, 1, 1, 1], "over_infinity": [5, 5]}


@pytest.fixture(scope="module")
def F1():
    return build_candidate(*F1_PARAMS)


def test_F1_profile(F1):
    prof = ramification_profile(F1)
    assert prof.as_dict() == PROFILE
    assert prof.ramification_total() == 18 == 2 * prof.degree - 2


def test_F2_matches_unnormalized_form():
    F2 = build_candidate(*F2_PARAMS)
    unnormalized = RationalFunction(x ** 6 * (x - 1) ** 3 * (x + 1) * 337500, Polynomial([-16, 4, 11]) ** 5)
    assert F2 == unnormalized
    assert ramification_profile(F2).as_dict() == PROFILE


def test_L_profile_reads_infinity_from_degrees():
    FL = laurent_as_rational(laurent_L())
    assert FL.den == x ** 5
    assert ramification_profile(FL).as_dict() == PROFILE


def test_squaring_map():
    prof = ramification_profile(RationalFunction(x ** 2, Polynomial([1])))
    assert prof.as_dict() == {"over_zero": [2], "over_one": [1, 1], "over_infinity": [2]}


def test_non_belyi_rejected():
    F = build_candidate(2, 3, 5)
    with pytest.raises(NotBelyiError):
        ramification_profile(F)
    assert ramification_profile(F, strict=False).ramification_total() < 18


def test_degenerate_candidates():
    with pytest.raises(DegenerateCandidateError):
        build_candidate(1, 0, 0)
    with pytest.raises(DegenerateCandidateError):
        build_candidate(0, 4, -1)
    with pytest.raises(DegenerateCandidateError):
        p_of(Fraction(-2, 5), 1)


def test_p_formula():
    assert p_of(4, -1) == 22 * x ** 3 + 2 * x ** 2 - 6 * x + 6
    assert p_of(0, 0) == 2 * x ** 3 + 4 * x ** 2


def test_derivative_identity(F1):
    K = F1.num.lc()
    # F' numerator, after dividing the common (x^2+4x-1)^4, is -K x^5 (x-1)^2 p(x) up to sign
    dn = poly_divexact(F1.derivative_numerator(), Polynomial([-1, 4, 1]) ** 4)
    expected = x ** 5 * (x - 1) ** 2 * p_of(4, -1) * K
    assert dn == expected or dn == -expected


def test_h_structure(F1):
    hs = h_structure(F1, 4, -1)
    assert hs.p == p_of(4, -1)
    assert hs.q.degree == 4 and hs.q.lc() == 1
    assert poly_gcd(hs.q, hs.q.derivative()).degree == 0
    assert hs.p * hs.p * hs.q * hs.const == F1.num - F1.den
    assert hs.const == (Fraction(50000, 27) - 1) / 22 ** 2


def test_poles_of_F1():
    quad = Polynomial([-1, 4, 1])
    assert quad(-2 + S5) == 0 and quad(-2 - S5) == 0


def test_mobius_to_L(F1):
    m = Mobius(*INVERSE_MOBIUS)
    G = mobius_substitute(F1, m)
    assert G == laurent_as_rational(laurent_L())
    assert decompose_laurent_form(G) == (L_K, L_A, L_B)


def test_forward_map():
    fwd = Mobius(*FORWARD_MOBIUS)
    assert fwd(-2 - S5) == 0
    assert fwd(FieldElem(0)) == 1
    assert fwd(-2 + S5) is None  # the other pole goes to infinity
    inv = Mobius(*INVERSE_MOBIUS)
    for p in (FieldElem(3), FieldElem(Fraction(1, 7), 2)):
        assert inv(fwd(p)) == p


def test_identity_mobius(F1):
    assert mobius_substitute(F1, Mobius(FieldElem(1), FieldElem(0), FieldElem(0), FieldElem(1))) == F1


def test_degenerate_mobius():
    with pytest.raises(ValueError):
        Mobius(FieldElem(1), FieldElem(2), FieldElem(2), FieldElem(4))


rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@settings(max_examples=20)
@given(rationals, rationals, rationals, rationals)
def test_profile_invariant_under_mobius(a, b, c, d):
    if a * d - b * c == 0:
        return
    F = build_candidate(*F1_PARAMS)
    m = Mobius(*(FieldElem(v) for v in (a, b, c, d)))
    assert ramification_profile(mobius_substitute(F, m)).as_dict() == PROFILE
