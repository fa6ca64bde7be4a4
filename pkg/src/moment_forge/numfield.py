"""Exact arithmetic in the real quadratic field Q(sqrt(d)).

Rationals are :class:`fractions.Fraction`, which is already kept in lowest
terms with a positive denominator.  A :class:`FieldElem` is ``rat + irr*sqrt(d)``
with both parts rational and ``d`` a squarefree integer > 1.
Plain integers and fractions are promoted on the fly so that
``2 * x`` and ``x + Fraction(1, 3)`` work.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = [
    "DEFAULT_D",
    "FieldElem",
    "FieldMismatchError",
    "field_add",
    "field_mul",
    "field_inv",
    "field_to_float",
    "parse_field",
    "sqrt_d",
]

DEFAULT_D = 5


class FieldMismatchError(ValueError):
    """Raised when elements of Q(sqrt(d)) and Q(sqrt(d')) are combined."""


def _is_squarefree(d: int) -> bool:
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


class FieldElem:
    """Immutable element ``rat + irr*sqrt(d)``."""

    __slots__ = ("rat", "irr", "d")

    def __init__(self, rat=0, irr=0, d: int = DEFAULT_D):
        if not _is_squarefree(d):
            raise ValueError(f"d must be a squarefree integer > 1, got {d}")
        object.__setattr__(self, "rat", Fraction(rat))
        object.__setattr__(self, "irr", Fraction(irr))
        object.__setattr__(self, "d", d)

    @classmethod
    def _raw(cls, rat: Fraction, irr: Fraction, d: int) -> "FieldElem":
        # skips validation; callers pass canonical Fractions and a checked d
        obj = object.__new__(cls)
        object.__setattr__(obj, "rat", rat)
        object.__setattr__(obj, "irr", irr)
        object.__setattr__(obj, "d", d)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    def __reduce__(self):
        return (FieldElem, (self.rat, self.irr, self.d))

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other) -> "FieldElem | None":
        if isinstance(other, FieldElem):
            if other.d != self.d:
                raise FieldMismatchError(f"cannot combine sqrt({self.d}) with sqrt({other.d})")
            return other
        if isinstance(other, (int, _RationalABC)):
            return FieldElem._raw(Fraction(other), Fraction(0), self.d)
        return None

    # -- predicates -------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.rat) or bool(self.irr)

    def is_rational(self) -> bool:
        return not self.irr

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.d == other.d and self.rat == other.rat and self.irr == other.irr
        if isinstance(other, (int, _RationalABC)):
            return not self.irr and self.rat == other
        return NotImplemented

    def __hash__(self):
        if not self.irr:
            return hash(self.rat)
        return hash((self.rat, self.irr, self.d))

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        return FieldElem._raw(-self.rat, -self.irr, self.d)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem._raw(self.rat + o.rat, self.irr + o.irr, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem._raw(self.rat - o.rat, self.irr - o.irr, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, e = self.rat, self.irr, o.rat, o.irr
        if not b and not e:
            return FieldElem._raw(a * c, Fraction(0), self.d)
        return FieldElem._raw(a * c + self.d * b * e, a * e + b * c, self.d)

    __rmul__ = __mul__

    def conjugate(self) -> "FieldElem":
        return FieldElem._raw(self.rat, -self.irr, self.d)

    def norm(self) -> Fraction:
        return self.rat * self.rat - self.d * self.irr * self.irr

    def inverse(self) -> "FieldElem":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(sqrt(d))")
        n = self.norm()
        # squarefree d > 1 means sqrt(d) is irrational, so the norm vanishes only at 0
        assert n != 0
        return FieldElem._raw(self.rat / n, -self.irr / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.irr:
            if not o.rat:
                raise ZeroDivisionError("division by zero in Q(sqrt(d))")
            return FieldElem._raw(self.rat / o.rat, self.irr / o.rat, self.d)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = FieldElem._raw(Fraction(1), Fraction(0), self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __float__(self):
        return field_to_float(self)

    # -- text -------------------------------------------------------------
    def __str__(self):
        if not self.irr:
            return str(self.rat)
        sign = "-" if self.irr < 0 else "+"
        return f"{self.rat}{sign}{abs(self.irr)}*sqrt({self.d})"

    def __repr__(self):
        return f"FieldElem({str(self)!r})"


def sqrt_d(d: int = DEFAULT_D) -> FieldElem:
    return FieldElem(0, 1, d)


def field_add(x: FieldElem, y: FieldElem) -> FieldElem:
    if x.d != y.d:
        raise FieldMismatchError(f"cannot combine sqrt({x.d}) with sqrt({y.d})")
    return x + y


def field_mul(x: FieldElem, y: FieldElem) -> FieldElem:
    if x.d != y.d:
        raise FieldMismatchError(f"cannot combine sqrt({x.d}) with sqrt({y.d})")
    return x * y


def field_inv(x: FieldElem) -> FieldElem:
    return x.inverse()


def field_to_float(x: FieldElem) -> float:
    """Evaluate ``rat + irr*sqrt(d)`` in double precision.

    Cancellation between the two parts is handled by evaluating through the
    conjugate when the parts have opposite signs, which keeps the relative
    error a few ulp even for tiny results such as ``(-3+sqrt(5))/2``.
    """
    a, b, d = x.rat, x.irr, x.d
    if not b:
        return float(a)
    root = math.sqrt(d)
    if not a or (a > 0) == (b > 0):
        return float(a) + float(b) * root
    # a + b*sqrt(d) = (a^2 - d b^2) / (a - b*sqrt(d)); denominator has no cancellation
    return float(a * a - d * b * b) / (float(a) - float(b) * root)


_NUM = r"[+-]?\d+(?:/\d+)?"
_FIELD_RE = re.compile(
    rf"^\s*(?P<rat>{_NUM})?\s*(?:(?P<sign>[+-])?\s*(?P<irr>\d+(?:/\d+)?)?\s*\*?\s*sqrt\((?P<d>\d+)\))?\s*$"
)


def parse_field(text: str, d: int = DEFAULT_D) -> FieldElem:
    """Parse the textual form ``p/q`` or ``p/q+r/s*sqrt(d)``.

    Also accepts a bare ``sqrt(d)`` term with an implicit coefficient.
    """
    m = _FIELD_RE.match(text)
    if not m or (m.group("rat") is None and m.group("d") is None):
        raise ValueError(f"not a field element: {text!r}")
    rat = Fraction(m.group("rat")) if m.group("rat") else Fraction(0)
    irr = Fraction(0)
    if m.group("d") is not None:
        dd = int(m.group("d"))
        if dd != d:
            raise FieldMismatchError(f"expected sqrt({d}), got sqrt({dd})")
        if m.group("sign") is None and m.group("rat") is not None:
            if m.group("irr") is not None:
                raise ValueError(f"missing sign before sqrt term: {text!r}")
            # "5*sqrt(5)": the leading number is the sqrt coefficient
            return FieldElem(0, rat, d)
        irr = Fraction(m.group("irr")) if m.group("irr") else Fraction(1)
        if m.group("sign") == "-":
            irr = -irr
    return FieldElem(rat, irr, d)
