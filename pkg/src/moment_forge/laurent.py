"""Laurent polynomials and ordinary polynomials over Q(sqrt(d)).

Products go through the integer kernels in :mod:`moment_forge._kernels`: both
operands are cleared of denominators, convolved over Z[sqrt(d)], and the
common denominator is divided back out.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping

from . import _kernels
from .numfield import DEFAULT_D, FieldElem, FieldMismatchError

__all__ = [
    "LaurentPoly",
    "Polynomial",
    "NotDivisibleError",
    "UndefinedGcdError",
    "lp_mul",
    "lp_pow",
    "lp_derivative",
    "lp_residue",
    "lp_compose_poly",
    "poly_gcd",
    "poly_divexact",
    "poly_squarefree",
    "parse_laurent",
]


class NotDivisibleError(ArithmeticError):
    pass


class UndefinedGcdError(ArithmeticError):
    pass


def _elem(c, d: int) -> FieldElem:
    if isinstance(c, FieldElem):
        if c.d != d:
            raise FieldMismatchError(f"coefficient in sqrt({c.d}), polynomial in sqrt({d})")
        return c
    return FieldElem(c, 0, d)


def _int_form(coeffs: list[FieldElem]) -> tuple[int, list[int], list[int]]:
    """Clear denominators: returns (den, rat_ints, irr_ints)."""
    den = 1
    for c in coeffs:
        den = math.lcm(den, c.rat.denominator, c.irr.denominator)
    rs = [c.rat.numerator * (den // c.rat.denominator) for c in coeffs]
    is_ = [c.irr.numerator * (den // c.irr.denominator) for c in coeffs]
    return den, rs, is_


def _from_int_form(den: int, rs: list[int], is_: list[int], d: int) -> list[FieldElem]:
    raw = FieldElem._raw
    zero = Fraction(0)
    out = []
    for r, i in zip(rs, is_):
        out.append(raw(Fraction(r, den) if r else zero, Fraction(i, den) if i else zero, d))
    return out


def _dense_mul(a: list[FieldElem], b: list[FieldElem], d: int) -> list[FieldElem]:
    if not a or not b:
        return []
    da, ar, ai = _int_form(a)
    db, br, bi = _int_form(b)
    cr, ci = _kernels.convolve(ar, ai, br, bi, d)
    return _from_int_form(da * db, cr, ci, d)


class LaurentPoly:
    """Finitely supported map degree -> nonzero coefficient (immutable)."""

    __slots__ = ("_c", "d")

    def __init__(self, coeffs: Mapping[int, object] | None = None, d: int = DEFAULT_D):
        c = {}
        for k, v in (coeffs or {}).items():
            v = _elem(v, d)
            if v:
                c[int(k)] = v
        self._c = c
        self.d = d

    @classmethod
    def _trusted(cls, c: dict, d: int) -> "LaurentPoly":
        obj = object.__new__(cls)
        obj._c = c
        obj.d = d
        return obj

    @classmethod
    def monomial(cls, k: int, coeff=1, d: int = DEFAULT_D) -> "LaurentPoly":
        return cls({k: coeff}, d)

    @classmethod
    def constant(cls, c, d: int = DEFAULT_D) -> "LaurentPoly":
        return cls({0: c}, d)

    @classmethod
    def from_dense(cls, lo: int, coeffs: Iterable, d: int = DEFAULT_D) -> "LaurentPoly":
        return cls({lo + i: c for i, c in enumerate(coeffs)}, d)

    # -- inspection -------------------------------------------------------
    def __bool__(self):
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, k: int) -> FieldElem:
        return self._c.get(k, FieldElem._raw(Fraction(0), Fraction(0), self.d))

    def terms(self) -> list[tuple[int, FieldElem]]:
        return sorted(self._c.items())

    def support(self) -> list[int]:
        return sorted(self._c)

    @property
    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero Laurent polynomial has no degree")
        return min(self._c)

    @property
    def max_degree(self) -> int:
        if not self._c:
            raise ValueError("zero Laurent polynomial has no degree")
        return max(self._c)

    def span(self) -> int:
        """``max_degree - min_degree``; 0 for constants and for zero."""
        return self.max_degree - self.min_degree if self._c else 0

    def lowest_coeff(self) -> FieldElem:
        return self._c[self.min_degree]

    def dense(self) -> tuple[int, list[FieldElem]]:
        """(min_degree, coefficients from min to max degree)."""
        if not self._c:
            return 0, []
        lo, hi = self.min_degree, self.max_degree
        return lo, [self.coeff(k) for k in range(lo, hi + 1)]

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            if other.d != self.d:
                raise FieldMismatchError(f"sqrt({self.d}) vs sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction, FieldElem)):
            return LaurentPoly({0: other}, self.d)
        return None

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, LaurentPoly) else other
        if o is None:
            return NotImplemented
        return self.d == o.d and self._c == o._c

    def __hash__(self):
        return hash((self.d, frozenset(self._c.items())))

    def __neg__(self):
        return LaurentPoly._trusted({k: -v for k, v in self._c.items()}, self.d)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for k, v in o._c.items():
            s = c[k] + v if k in c else v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return LaurentPoly._trusted(c, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def scale(self, c) -> "LaurentPoly":
        c = _elem(c, self.d)
        if not c:
            return LaurentPoly._trusted({}, self.d)
        return LaurentPoly._trusted({k: v * c for k, v in self._c.items()}, self.d)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``z**k``."""
        return LaurentPoly._trusted({e + k: v for e, v in self._c.items()}, self.d)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            return self.scale(other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return lp_mul(self, o)

    __rmul__ = __mul__

    def __pow__(self, i: int):
        if not isinstance(i, int):
            return NotImplemented
        return lp_pow(self, i)

    def derivative(self) -> "LaurentPoly":
        return lp_derivative(self)

    def residue(self) -> FieldElem:
        return lp_residue(self)

    def to_polynomial(self) -> "Polynomial":
        if self._c and self.min_degree < 0:
            raise ValueError("Laurent polynomial has negative powers")
        if not self._c:
            return Polynomial([], self.d)
        return Polynomial([self.coeff(k) for k in range(self.max_degree + 1)], self.d)

    # -- text -------------------------------------------------------------
    def __str__(self):
        if not self._c:
            return "0"
        return " + ".join(f"{_coeff_text(v)}*z^{k}" for k, v in self.terms())

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


def _coeff_text(c: FieldElem) -> str:
    s = str(c)
    return f"({s})" if not c.is_rational() else s


# -- Laurent operations ----------------------------------------------------

def lp_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    if f.d != g.d:
        raise FieldMismatchError(f"sqrt({f.d}) vs sqrt({g.d})")
    if not f or not g:
        return LaurentPoly._trusted({}, f.d)
    lo_f, cf = f.dense()
    lo_g, cg = g.dense()
    prod = _dense_mul(cf, cg, f.d)
    lo = lo_f + lo_g
    return LaurentPoly._trusted({lo + i: c for i, c in enumerate(prod) if c}, f.d)


def lp_pow(f: LaurentPoly, i: int) -> LaurentPoly:
    if i < 0:
        raise ValueError("negative power of a Laurent polynomial")
    result = LaurentPoly.constant(1, f.d)
    base = f
    while i:
        if i & 1:
            result = lp_mul(result, base)
        i >>= 1
        if i:
            base = lp_mul(base, base)
    return result


def lp_derivative(f: LaurentPoly) -> LaurentPoly:
    return LaurentPoly._trusted({k - 1: v * k for k, v in f._c.items() if k != 0}, f.d)


def lp_residue(f: LaurentPoly) -> FieldElem:
    """Coefficient of ``z**-1``."""
    return f.coeff(-1)


def lp_compose_poly(R: "Polynomial", f: LaurentPoly) -> LaurentPoly:
    """``R(f)`` by Horner's rule."""
    if R.d != f.d:
        raise FieldMismatchError(f"sqrt({R.d}) vs sqrt({f.d})")
    acc = LaurentPoly._trusted({}, f.d)
    for c in reversed(R.coeffs):
        acc = lp_mul(acc, f) + LaurentPoly({0: c}, f.d)
    return acc


# -- ordinary polynomials ---------------------------------------------------

class Polynomial:
    """Dense univariate polynomial, coefficients from degree 0 upward."""

    __slots__ = ("coeffs", "d")

    def __init__(self, coeffs: Iterable = (), d: int = DEFAULT_D):
        cs = [_elem(c, d) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.d = d

    @classmethod
    def x(cls, d: int = DEFAULT_D) -> "Polynomial":
        return cls([0, 1], d)

    @classmethod
    def constant(cls, c, d: int = DEFAULT_D) -> "Polynomial":
        return cls([c], d)

    @classmethod
    def from_roots(cls, roots: Iterable, d: int = DEFAULT_D) -> "Polynomial":
        p = cls([1], d)
        for r in roots:
            p = p * cls([-_elem(r, d), 1], d)
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> FieldElem:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> FieldElem:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return FieldElem._raw(Fraction(0), Fraction(0), self.d)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.d != self.d:
                raise FieldMismatchError(f"sqrt({self.d}) vs sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction, FieldElem)):
            return Polynomial([other], self.d)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.d, self.coeffs))

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.d)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Polynomial([self.coeff(k) + o.coeff(k) for k in range(n)], self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            c = _elem(other, self.d)
            return Polynomial([v * c for v in self.coeffs], self.d)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial(_dense_mul(list(self.coeffs), list(o.coeffs), self.d), self.d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Polynomial([1], self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        if not g:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dg = g.degree
        if len(rem) - 1 < dg:
            return Polynomial([], self.d), self
        inv_lc = g.lc().inverse()
        quot = [FieldElem._raw(Fraction(0), Fraction(0), self.d)] * (len(rem) - dg)
        for k in range(len(rem) - 1, dg - 1, -1):
            c = rem[k]
            if not c:
                continue
            c = c * inv_lc
            quot[k - dg] = c
            for i, gc in enumerate(g.coeffs):
                if gc:
                    rem[k - dg + i] = rem[k - dg + i] - c * gc
        return Polynomial(quot, self.d), Polynomial(rem[:dg], self.d)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        inv = self.lc().inverse()
        return Polynomial([c * inv for c in self.coeffs], self.d)

    def derivative(self) -> "Polynomial":
        return Polynomial([c * k for k, c in enumerate(self.coeffs) if k], self.d)

    def __call__(self, x):
        acc = FieldElem._raw(Fraction(0), Fraction(0), self.d)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_laurent(self) -> LaurentPoly:
        return LaurentPoly({k: c for k, c in enumerate(self.coeffs)}, self.d)

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"{_coeff_text(c)}*x^{k}" for k, c in enumerate(self.coeffs) if c
        )

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd by Euclid's algorithm."""
    if not f and not g:
        raise UndefinedGcdError("gcd(0, 0) is undefined")
    a, b = f, g
    while b:
        r = a % b
        a, b = b, r.monic() if r else r
    return a.monic()


def poly_divexact(f: Polynomial, g: Polynomial) -> Polynomial:
    if not g:
        raise ZeroDivisionError("exact division by the zero polynomial")
    q, r = divmod(f, g)
    if r:
        raise NotDivisibleError(f"remainder {r} is nonzero")
    return q


def poly_squarefree(f: Polynomial) -> list[Polynomial]:
    """Yun's squarefree decomposition.

    Returns ``[a_1, a_2, ...]`` (monic, pairwise coprime, squarefree) with
    ``f = lc(f) * prod a_i**i``.  Trailing ones are dropped.
    """
    if f.degree < 1:
        return []
    f = f.monic()
    fp = f.derivative()
    a0 = poly_gcd(f, fp)
    b = poly_divexact(f, a0)
    c = poly_divexact(fp, a0)
    dd = c - b.derivative()
    out = []
    while b.degree > 0:
        a = poly_gcd(b, dd)
        out.append(a)
        b = poly_divexact(b, a)
        c = poly_divexact(dd, a)
        dd = c - b.derivative()
    while out and out[-1].degree == 0:
        out.pop()
    return out


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt)|([zx])|(\*\*|[-+*/^()]))")


class _Parser:
    """Recursive-descent parser for sums of products of numbers, ``sqrt(d)`` and ``z``.

    Division is allowed by monomials only (``(z^2+1)/z``).
    """

    def __init__(self, text: str, d: int):
        self.d = d
        self.toks = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"unexpected input at {pos}: {text[pos:pos + 10]!r}")
            num, sq, var, op = m.groups()
            if num is not None:
                self.toks.append(("num", int(num)))
            elif sq:
                self.toks.append(("sqrt", None))
            elif var:
                self.toks.append(("var", None))
            else:
                self.toks.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, val=None):
        t = self.peek()
        if t[0] is None or (kind and t[0] != kind) or (val and t[1] != val):
            raise ValueError(f"parse error near token {self.i}: expected {val or kind}, got {t}")
        self.i += 1
        return t

    def parse(self) -> LaurentPoly:
        v = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input at token {self.i}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            w = self.unary()
            if op == "*":
                v = v * w
            else:
                if len(w.support()) != 1:
                    raise ValueError("division is only supported by monomials")
                (k, c), = w.terms()
                v = v.shift(-k).scale(c.inverse())
        return v

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() in (("op", "-"), ("op", "+")):
                sign = -1 if self.take()[1] == "-" else 1
            e = sign * self.take("num")[1]
            if e >= 0:
                return lp_pow(base, e)
            if len(base.support()) != 1:
                raise ValueError("negative powers are only supported for monomials")
            (k, c), = base.terms()
            return LaurentPoly({k * e: c ** e}, self.d)
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return LaurentPoly.constant(val, self.d)
        if kind == "var":
            self.take()
            return LaurentPoly.monomial(1, 1, self.d)
        if kind == "sqrt":
            self.take()
            self.take("op", "(")
            dd = self.take("num")[1]
            self.take("op", ")")
            if dd != self.d:
                raise FieldMismatchError(f"expected sqrt({self.d}), got sqrt({dd})")
            return LaurentPoly.constant(FieldElem(0, 1, self.d), self.d)
        if (kind, val) == ("op", "("):
            self.take()
            v = self.expr()
            self.take("op", ")")
            return v
        raise ValueError(f"unexpected token {kind} {val!r}")


def parse_laurent(text: str, d: int = DEFAULT_D) -> LaurentPoly:
    """Parse a Laurent polynomial in ``z`` (``x`` is accepted as a synonym).

    Reads both the canonical output of ``str(LaurentPoly)`` and hand-written
    expressions such as ``(z^2+1)/z`` or ``-(9+4*sqrt(5))*z^2 + z^-2``.
    """
    return _Parser(text, d).parse()
