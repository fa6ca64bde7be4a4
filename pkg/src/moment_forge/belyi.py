"""Certification of Belyi functions by exact multiplicity bookkeeping.

The fibre of a rational map F over a value c is read from the squarefree
decomposition of ``num(F) - c*den(F)`` (or of ``den(F)`` over infinity); the
point at infinity of the source contributes ``deg F - deg`` of that
polynomial.  F is Belyi exactly when the three fibres over 0, 1, infinity
absorb the full Riemann-Hurwitz ramification ``2 deg F - 2`` (genus 0).
"""
from __future__ import annotations

from dataclasses import dataclass

from .characters import Partition
from .laurent import LaurentPoly, Polynomial, poly_divexact, poly_gcd, poly_squarefree
from .numfield import FieldElem

__all__ = [
    "RationalFunction",
    "Mobius",
    "RamificationProfile",
    "DegenerateCandidateError",
    "NotBelyiError",
    "build_candidate",
    "p_of",
    "fiber_partition",
    "ramification_profile",
    "mobius_substitute",
    "h_structure",
    "laurent_as_rational",
    "decompose_laurent_form",
]


class DegenerateCandidateError(ValueError):
    pass


class NotBelyiError(ValueError):
    pass


class RationalFunction:
    """num/den in lowest terms with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial, *, reduce: bool = True):
        if not den:
            raise ZeroDivisionError("zero denominator")
        if reduce:
            g = poly_gcd(num, den) if num else den.monic()
            num, den = poly_divexact(num, g), poly_divexact(den, g)
        lc = den.lc()
        if lc != 1:
            inv = lc.inverse()
            num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @property
    def d(self) -> int:
        return self.num.d

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def __sub__(self, c) -> "RationalFunction":
        return RationalFunction(self.num - self.den * c, self.den, reduce=False)

    def __eq__(self, other):
        return isinstance(other, RationalFunction) and self.num == other.num and self.den == other.den

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def derivative_numerator(self) -> Polynomial:
        """num' den - num den' (not reduced)."""
        return self.num.derivative() * self.den - self.num * self.den.derivative()

    def __repr__(self):
        return f"RationalFunction(({self.num}) / ({self.den}))"


@dataclass(frozen=True)
class Mobius:
    """x -> (a x + b) / (c x + d)."""

    a: FieldElem
    b: FieldElem
    c: FieldElem
    d: FieldElem

    def __post_init__(self):
        if not (self.a * self.d - self.b * self.c):
            raise ValueError("Mobius map is degenerate (ad - bc = 0)")

    def __call__(self, x):
        den = self.c * x + self.d
        if not den:
            return None  # x goes to infinity
        return (self.a * x + self.b) / den

    def inverse(self) -> "Mobius":
        return Mobius(self.d, -self.b, -self.c, self.a)


@dataclass(frozen=True)
class RamificationProfile:
    over_zero: Partition
    over_one: Partition
    over_infinity: Partition

    @property
    def degree(self) -> int:
        return self.over_zero.n

    def ramification_total(self) -> int:
        n = self.degree
        return sum(n - len(p) for p in (self.over_zero, self.over_one, self.over_infinity))

    def as_dict(self) -> dict:
        return {
            "over_zero": list(self.over_zero),
            "over_one": list(self.over_one),
            "over_infinity": list(self.over_infinity),
        }


def _elem(v, d: int) -> FieldElem:
    return v if isinstance(v, FieldElem) else FieldElem(v, 0, d)


def build_candidate(K, a, b, d: int = 5) -> RationalFunction:
    """K x^6 (x-1)^3 (x+1) / (x^2 + a x + b)^5."""
    K, a, b = _elem(K, d), _elem(a, d), _elem(b, d)
    x = Polynomial.x(d)
    num = x ** 6 * (x - 1) ** 3 * (x + 1) * K
    quad = Polynomial([b, a, 1], d)
    if not K or poly_gcd(num, quad).degree > 0:
        raise DegenerateCandidateError(
            f"x^2 + ({a})x + ({b}) shares a root with x(x-1)(x+1); degree drops below 10"
        )
    return RationalFunction(num, quad ** 5, reduce=False)


def p_of(a, b, d: int = 5) -> Polynomial:
    """(5a+2)x^3 + (2a+10b+4)x^2 - (a-2b)x - 6b."""
    a, b = _elem(a, d), _elem(b, d)
    if not (5 * a + 2):
        raise DegenerateCandidateError("5a + 2 = 0: the cubic degenerates")
    return Polynomial([-6 * b, -(a - 2 * b), 2 * a + 10 * b + 4, 5 * a + 2], d)


def fiber_partition(P: Polynomial, degree: int) -> Partition:
    """Multiplicities of the roots of P, plus infinity with multiplicity degree - deg P."""
    parts = []
    for mult, factor in enumerate(poly_squarefree(P), start=1):
        parts += [mult] * factor.degree
    if degree > P.degree:
        parts.append(degree - P.degree)
    return Partition.of(parts)


def ramification_profile(F: RationalFunction, *, strict: bool = True) -> RamificationProfile:
    """Fibres of F over 0, 1, infinity.  Raises NotBelyiError on extra ramification."""
    n = F.degree
    if n < 1:
        raise ValueError("constant function has no ramification profile")
    prof = RamificationProfile(
        fiber_partition(F.num, n),
        fiber_partition(F.num - F.den, n),
        fiber_partition(F.den, n),
    )
    if strict and prof.ramification_total() != 2 * n - 2:
        raise NotBelyiError(
            f"ramification over 0,1,inf is {prof.ramification_total()}, need {2 * n - 2}"
        )
    return prof


def laurent_as_rational(f: LaurentPoly) -> RationalFunction:
    lo = min(f.min_degree, 0)
    num = f.shift(-lo).to_polynomial()
    den = Polynomial([0] * (-lo) + [1], f.d)
    return RationalFunction(num, den)


def mobius_substitute(F: RationalFunction, m: Mobius) -> RationalFunction:
    """F(m(z)), by homogenising with (c z + d)^deg F."""
    dd = F.d
    n = F.degree
    lin_num = Polynomial([m.b, m.a], dd)
    lin_den = Polynomial([m.d, m.c], dd)
    num_pows = [Polynomial([1], dd)]
    den_pows = [Polynomial([1], dd)]
    for _ in range(n):
        num_pows.append(num_pows[-1] * lin_num)
        den_pows.append(den_pows[-1] * lin_den)

    def homog(P: Polynomial) -> Polynomial:
        acc = Polynomial([], dd)
        for k, c in enumerate(P.coeffs):
            if c:
                acc = acc + num_pows[k] * den_pows[n - k] * c
        return acc

    return RationalFunction(homog(F.num), homog(F.den))


@dataclass(frozen=True)
class HStructure:
    """num(F) - den(F) = const * p^2 * q for the candidate form."""

    const: FieldElem
    p: Polynomial
    q: Polynomial


def h_structure(F: RationalFunction, a, b) -> HStructure:
    """Split num(F - 1) as ((K-1)/(5a+2)^2) p^2 q with q monic quartic.

    Raises NotDivisibleError if p^2 does not divide, ValueError if q is not
    squarefree or shares a root with p.
    """
    p = p_of(a, b, F.d)
    H = F.num - F.den
    K = F.num.lc()
    const = (K - 1) / (5 * _elem(a, F.d) + 2) ** 2
    q = poly_divexact(H, p * p * const)
    if q.degree != 4 or q.lc() != 1:
        raise ValueError(f"cofactor {q} is not a monic quartic")
    if poly_gcd(q, q.derivative()).degree > 0:
        raise ValueError("quartic cofactor is not squarefree")
    if poly_gcd(p, q).degree > 0:
        raise ValueError("p and q share a root")
    return HStructure(const, p, q)


def decompose_laurent_form(F: RationalFunction) -> tuple[FieldElem, FieldElem, FieldElem]:
    """Read (K, a, b) off F = K (z-1)^6 (z-a)^3 (z-b) / z^5."""
    z5 = Polynomial([0, 0, 0, 0, 0, 1], F.d)
    if F.den != z5:
        raise ValueError(f"denominator {F.den} is not z^5")
    K = F.num.lc()
    sqf = poly_squarefree(F.num)
    if len(sqf) != 6 or [f.degree for f in sqf] != [1, 0, 1, 0, 0, 1]:
        raise ValueError("numerator does not have the multiplicity pattern 6,3,1")
    if sqf[5] != Polynomial([-1, 1], F.d):
        raise ValueError("the sextuple root is not z = 1")
    return K, -sqf[2].coeffs[0], -sqf[0].coeffs[0]
