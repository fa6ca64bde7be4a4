"""Permutation groups of small degree: the edge action of S5 on K5 and friends.

Permutations are stored 0-based; cycle notation in and out is 1-based like
the usual notation ``(1,5)(2,8)(4,7)``.  Products compose left to right:
``(p * q)(x) = q(p(x))``, so ``sigma * alpha * phi`` means apply sigma first.
"""
from __future__ import annotations

import itertools
import re
from collections import deque
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import rank

__all__ = [
    "Permutation",
    "EdgeLabeling",
    "FIG1_LABELING",
    "edge_action",
    "group_order",
    "check_relation",
    "is_transitive",
    "orbits",
    "find_blocks",
    "is_primitive",
    "invariant_subspace_check",
    "span_rank",
    "fan_vectors",
    "hamiltonian_vectors",
    "monodromy_generators",
]


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, cycles: "str | Iterable[Sequence[int]]", n: int) -> "Permutation":
        """Build from 1-based cycles, given as text or as nested sequences."""
        if isinstance(cycles, str):
            cycles = parse_cycles(cycles)
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            cyc = [c - 1 for c in cyc]
            for c in cyc:
                if not 0 <= c < n:
                    raise ValueError(f"point {c + 1} outside 1..{n}")
                if c in seen:
                    raise ValueError(f"point {c + 1} appears twice")
                seen.add(c)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """1-based cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = []
            x = start
            while x not in seen:
                seen.add(x)
                cyc.append(x + 1)
                x = self.images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    def fixed_points(self) -> int:
        return sum(1 for i, j in enumerate(self.images) if i == j)

    def act_on_vector(self, v: Sequence) -> list:
        """Coordinate permutation ``w[g(x)] = v[x]``."""
        w = [None] * self.degree
        for x, gx in enumerate(self.images):
            w[gx] = v[x]
        return w

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation.from_cycles({str(self)!r}, {self.degree})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[list[int]]:
    text = text.strip()
    if text in ("", "()", "1", "id"):
        return []
    if _CYCLE_RE.sub("", text).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    return [[int(p) for p in body.split(",") if p.strip()] for body in _CYCLE_RE.findall(text)]


class EdgeLabeling:
    """Bijection from labels 1..10 to the 2-subsets of {1..5}."""

    def __init__(self, edges: Sequence[tuple[int, int]]):
        edges = [frozenset(e) for e in edges]
        all_pairs = {frozenset(p) for p in itertools.combinations(range(1, 6), 2)}
        if len(edges) != 10 or set(edges) != all_pairs:
            raise ValueError("labeling must be a bijection onto the 10 edges of K5")
        self.edge_of_label = {i + 1: e for i, e in enumerate(edges)}
        self.label_of_edge = {e: i for i, e in self.edge_of_label.items()}


# labels 1..5: pentagon sides {i, i+1}; labels 6..10: pentagram sides {i, i+2}
FIG1_LABELING = EdgeLabeling(
    [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3), (2, 4), (3, 5), (4, 1), (5, 2)]
)


def edge_action(s: Permutation, lab: EdgeLabeling = FIG1_LABELING) -> Permutation:
    if s.degree != 5:
        raise ValueError("edge action needs a permutation of degree 5")
    img = []
    for u in range(1, 11):
        e = lab.edge_of_label[u]
        moved = frozenset(s(v - 1) + 1 for v in e)
        img.append(lab.label_of_edge[moved] - 1)
    return Permutation(img)


def monodromy_generators() -> dict[str, Permutation]:
    """sigma, alpha, phi: the monodromy generators in the edge action, degree 10."""
    return {
        "sigma": Permutation.from_cycles("(2,5,7,6,10,9)(3,8,4)", 10),
        "alpha": Permutation.from_cycles("(1,5)(2,8)(4,7)", 10),
        "phi": Permutation.from_cycles("(1,2,3,4,5)(6,7,8,9,10)", 10),
    }


def check_relation(*gens: Permutation) -> bool:
    """True iff the left-to-right product of ``gens`` is the identity."""
    if not gens:
        return True
    prod = gens[0]
    for g in gens[1:]:
        prod = prod * g
    return prod.is_identity()


def _common_degree(gens: Sequence[Permutation]) -> int:
    degs = {g.degree for g in gens}
    if len(degs) != 1:
        raise ValueError(f"generators have degrees {sorted(degs)}")
    return degs.pop()


# -- Schreier-Sims ------------------------------------------------------------

def _strip(g: tuple, base: list[int], trans: list[dict]) -> tuple[tuple, int]:
    for i, b in enumerate(base):
        x = g[b]
        if x not in trans[i]:
            return g, i
        u = trans[i][x]
        uinv = _inv(u)
        g = tuple(uinv[y] for y in g)
    return g, len(base)


def _inv(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def _mul(p: tuple, q: tuple) -> tuple:
    return tuple(q[i] for i in p)


def _orbit_transversal(b: int, gens: list[tuple]) -> dict:
    ident = tuple(range(len(gens[0]))) if gens else None
    trans = {b: ident}
    queue = deque([b])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = s[x]
            if y not in trans:
                trans[y] = _mul(trans[x], s)
                queue.append(y)
    return trans


def _schreier_sims(gens: list[tuple], n: int) -> tuple[list[int], list[dict]]:
    ident = tuple(range(n))
    gens = [g for g in gens if g != ident]
    base: list[int] = []
    S: list[list[tuple]] = []
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(next(x for x in range(n) if g[x] != x))
            S.append([])
    if not base:
        return [], []
    for i in range(len(base)):
        S[i] = [g for g in gens if all(g[b] == b for b in base[:i])]
    trans = [_orbit_transversal(base[i], S[i]) for i in range(len(base))]
    i = len(base) - 1
    while i >= 0:
        restart = False
        for x, u in list(trans[i].items()):
            for s in S[i]:
                h = _mul(_mul(u, s), _inv(trans[i][s[x]]))
                if h == ident:
                    continue
                residue, level = _strip(h, base, trans)
                if residue != ident:
                    if level == len(base):
                        base.append(next(y for y in range(n) if residue[y] != y))
                        S.append([])
                        trans.append({})
                    for l in range(i + 1, level + 1):
                        S[l].append(residue)
                        trans[l] = _orbit_transversal(base[l], S[l])
                    i = level
                    restart = True
                    break
            if restart:
                break
        if not restart:
            i -= 1
    return base, trans


def group_order(generators: Sequence[Permutation]) -> int:
    """Order of the generated group via a Schreier-Sims stabilizer chain."""
    n = _common_degree(generators)
    _, trans = _schreier_sims([g.images for g in generators], n)
    order = 1
    for t in trans:
        order *= len(t)
    return order


def group_contains(generators: Sequence[Permutation], g: Permutation) -> bool:
    n = _common_degree(list(generators) + [g])
    base, trans = _schreier_sims([h.images for h in generators], n)
    residue, level = _strip(g.images, base, trans)
    return level == len(base) and residue == tuple(range(n))


# -- orbits, blocks -----------------------------------------------------------

def orbits(generators: Sequence[Permutation]) -> list[list[int]]:
    """0-based orbits on points."""
    n = _common_degree(generators)
    seen = set()
    out = []
    for p in range(n):
        if p in seen:
            continue
        orb = {p}
        queue = deque([p])
        while queue:
            x = queue.popleft()
            for g in generators:
                y = g(x)
                if y not in orb:
                    orb.add(y)
                    queue.append(y)
        seen |= orb
        out.append(sorted(orb))
    return out


def is_transitive(generators: Sequence[Permutation]) -> bool:
    return len(orbits(generators)) == 1


def _minimal_block_system(generators: Sequence[Permutation], n: int, a: int, b: int) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[max(rx, ry)] = min(rx, ry)
        return True

    union(a, b)
    changed = True
    while changed:
        changed = False
        for x in range(n):
            r = find(x)
            if r == x:
                continue
            for g in generators:
                if union(g(x), g(r)):
                    changed = True
    classes: dict[int, list[int]] = {}
    for x in range(n):
        classes.setdefault(find(x), []).append(x)
    return sorted(classes.values())


def find_blocks(generators: Sequence[Permutation]) -> list[list[list[int]]]:
    """Distinct nontrivial block systems (0-based) generated by pairs {0, x}.

    For a transitive group every nontrivial block system is reached this
    way; an empty result means the action is primitive.
    """
    n = _common_degree(generators)
    systems = []
    for x in range(1, n):
        sysm = _minimal_block_system(generators, n, 0, x)
        if len(sysm) > 1 and sysm not in systems:
            systems.append(sysm)
    return systems


def is_primitive(generators: Sequence[Permutation]) -> bool:
    return is_transitive(generators) and not find_blocks(generators)


# -- invariant subspaces --------------------------------------------------------

def span_rank(vectors: Sequence[Sequence]) -> int:
    return rank([[Fraction(x) for x in v] for v in vectors])


def invariant_subspace_check(generators: Sequence[Permutation], spanning: Sequence[Sequence]) -> bool:
    """True iff every ``g . v`` lies in the rational span of ``spanning``."""
    rows = [[Fraction(x) for x in v] for v in spanning]
    r = rank(rows)
    for g in generators:
        if g.degree != len(rows[0]):
            raise ValueError("vector length differs from permutation degree")
        for v in rows:
            if rank(rows + [g.act_on_vector(v)]) != r:
                return False
    return True


def fan_vectors(lab: EdgeLabeling = FIG1_LABELING) -> list[tuple[int, ...]]:
    """v_i = indicator of the edges incident to vertex i."""
    return [
        tuple(1 if i in lab.edge_of_label[u] else 0 for u in range(1, 11))
        for i in range(1, 6)
    ]


# w_k = (edges of H_k) - (edges of the complementary Hamiltonian cycle)
HAMILTONIAN_VECTORS = (
    (1, -1, 1, -1, 1, -1, 1, 1, -1, -1),
    (1, 1, -1, 1, -1, -1, -1, 1, 1, -1),
    (-1, 1, 1, -1, 1, -1, -1, -1, 1, 1),
    (1, -1, 1, 1, -1, 1, -1, -1, -1, 1),
    (-1, 1, -1, 1, 1, 1, 1, -1, -1, -1),
    (-1, -1, -1, -1, -1, 1, 1, 1, 1, 1),
)


def hamiltonian_vectors() -> list[tuple[int, ...]]:
    return list(HAMILTONIAN_VECTORS)


def is_hamiltonian_cycle(labels: Iterable[int], lab: EdgeLabeling = FIG1_LABELING) -> bool:
    """Do these 5 edge labels form a single cycle through all 5 vertices?"""
    edges = [tuple(lab.edge_of_label[u]) for u in labels]
    if len(edges) != 5:
        return False
    deg = {v: 0 for v in range(1, 6)}
    adj = {v: [] for v in range(1, 6)}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
        adj[a].append(b)
        adj[b].append(a)
    if any(x != 2 for x in deg.values()):
        return False
    seen = {1}
    stack = [1]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == 5


def symmetric_group(n: int) -> list[Permutation]:
    return [Permutation(p) for p in itertools.permutations(range(n))]
