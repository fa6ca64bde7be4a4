"""Symmetric-group characters (Murnaghan-Nakayama) and Frobenius tuple counts."""
from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

__all__ = [
    "Partition",
    "partitions",
    "mn_character",
    "class_size",
    "centralizer_size",
    "hook_dimension",
    "frobenius_count",
    "frobenius_contributions",
    "perm_character_multiplicities",
    "perm_character_norm",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive ints."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        """Sort arbitrary positive parts into a partition."""
        return cls(sorted(parts, reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """``6,3,1`` or exponent form ``2^3 1^4``."""
        text = text.strip()
        if "^" in text:
            parts = []
            for tok in text.replace(",", " ").split():
                base, _, exp = tok.partition("^")
                parts += [int(base)] * int(exp or 1)
            return cls.of(parts)
        return cls.of(int(p) for p in text.replace(" ", ",").split(",") if p)

    @property
    def n(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"


def partitions(n: int) -> list[Partition]:
    """All partitions of n in lexicographic order (ascending)."""
    out = []

    def rec(remaining, max_part, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(remaining, max_part), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n, [])
    return sorted(out)


@lru_cache(maxsize=None)
def _mn(beta: frozenset, mu: tuple) -> int:
    # beta-set form: removing a rim hook of length r moves a bead x -> x - r
    if not mu:
        return 1
    r = mu[0]
    rest = mu[1:]
    total = 0
    for x in beta:
        y = x - r
        if y < 0 or y in beta:
            continue
        height = sum(1 for b in beta if y < b < x)
        sign = -1 if height % 2 else 1
        total += sign * _mn((beta - {x}) | {y}, rest)
    return total


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """chi_lambda evaluated on the class of cycle type mu."""
    lam = Partition(lam)
    mu = Partition.of(mu)
    if lam.n != mu.n:
        raise ValueError(f"|lambda| = {lam.n} but |mu| = {mu.n}")
    k = len(lam)
    beta = frozenset(p + (k - 1 - i) for i, p in enumerate(lam))
    return _mn(beta, tuple(mu))


def centralizer_size(mu: Sequence[int]) -> int:
    """z_mu = prod_i i^{a_i} a_i!."""
    z = 1
    for part, mult in Counter(mu).items():
        z *= part ** mult * math.factorial(mult)
    return z


def class_size(mu: Sequence[int]) -> int:
    mu = Partition.of(mu)
    return math.factorial(mu.n) // centralizer_size(mu)


def hook_dimension(lam: Sequence[int]) -> int:
    """Hook length formula."""
    lam = Partition(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(lam.n) // hooks


def _check_classes(n: int, classes: Sequence[Sequence[int]]) -> list[Partition]:
    parts = [Partition.of(c) for c in classes]
    for c in parts:
        if c.n != n:
            raise ValueError(f"class {c} is not a partition of {n}")
    return parts


def frobenius_contributions(n: int, classes: Sequence[Sequence[int]]) -> list[tuple[Partition, Fraction]]:
    """Per-character terms of the count; they sum to the Frobenius count."""
    parts = _check_classes(n, classes)
    k = len(parts)
    prefactor = Fraction(math.prod(class_size(c) for c in parts), math.factorial(n))
    out = []
    for lam in partitions(n):
        dim = mn_character(lam, [1] * n)
        term = math.prod(mn_character(lam, c) for c in parts) / Fraction(dim) ** (k - 2)
        out.append((lam, prefactor * term))
    return out


def frobenius_count(n: int, classes: Sequence[Sequence[int]]) -> int:
    """Number of tuples (x_1..x_k) in S_n with x_i in class i and x_1...x_k = 1."""
    total = sum(t for _, t in frobenius_contributions(n, classes))
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"Frobenius sum {total} is not a nonnegative integer")
    return int(total)


def perm_character_multiplicities(
    n: int, fix: Callable[[tuple[int, ...]], int]
) -> list[tuple[Partition, int]]:
    """<pi, chi_lambda> for a permutation character given by fixed-point counts.

    ``fix(g)`` receives a 0-based image tuple of an element of S_n and returns
    the number of points it fixes in the action.  Class functions only need
    one representative per class, so one element per cycle type is used.
    """
    reps = _class_representatives(n)
    out = []
    for lam in partitions(n):
        s = sum(class_size(mu) * fix(g) * mn_character(lam, mu) for mu, g in reps.items())
        q, r = divmod(s, math.factorial(n))
        if r:
            raise ArithmeticError(f"multiplicity of {lam} is not an integer")
        out.append((lam, q))
    return out


def perm_character_norm(n: int, fix: Callable[[tuple[int, ...]], int]) -> int:
    """<pi, pi> = (1/|G|) sum_g fix(g)^2, by class."""
    reps = _class_representatives(n)
    s = sum(class_size(mu) * fix(g) ** 2 for mu, g in reps.items())
    q, r = divmod(s, math.factorial(n))
    if r:
        raise ArithmeticError("<pi, pi> is not an integer")
    return q


def _class_representatives(n: int) -> dict[Partition, tuple[int, ...]]:
    reps = {}
    for mu in partitions(n):
        img = []
        start = 0
        for part in mu:
            img += [start + (i + 1) % part for i in range(part)]
            start += part
        reps[mu] = tuple(img)
    return reps
