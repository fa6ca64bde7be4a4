"""End-to-end checks of the construction, one function per acceptance item.

Each check returns a :class:`CheckResult`; ``run_all`` collects them in
order.  The CLI ``reproduce-all`` command and the acceptance tests both go
through this module, so they cannot drift apart.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .basis import solve_basis
from .belyi import (
    Mobius,
    RationalFunction,
    build_candidate,
    decompose_laurent_form,
    h_structure,
    laurent_as_rational,
    mobius_substitute,
    p_of,
    ramification_profile,
)
from .characters import Partition, frobenius_count, partitions, perm_character_norm
from .counterexample import (
    F1_PARAMS,
    F2_PARAMS,
    INVERSE_MOBIUS,
    L_A,
    L_B,
    L_K,
    ORBIT_SIZE,
    SPLIT_VECTOR,
    laurent_L,
    reference_basis,
)
from .decompose import decompose, reconstruct
from .dessin import VERTEX_TOL, render_dessin
from .laurent import Polynomial
from .moments import PowerTable, orbit_size_N, polynomial_rigidity_rank, verify_many, verify_solution
from .numfield import FieldElem
from .perm import (
    Permutation,
    check_relation,
    edge_action,
    fan_vectors,
    group_order,
    hamiltonian_vectors,
    invariant_subspace_check,
    is_primitive,
    is_transitive,
    monodromy_generators,
    span_rank,
    symmetric_group,
)

PROFILE = (Partition((6, 3, 1)), Partition((2, 2, 2, 1, 1, 1, 1)), Partition((5, 5)))
CLASSES = [(6, 3, 1), (2, 2, 2, 1, 1, 1, 1), (5, 5)]
MAP_COUNT = 25_401_600


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:>2} {self.name}: {self.detail}"


class _Failed(Exception):
    pass


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise _Failed(msg)


def check_basis() -> str:
    L = laurent_L()
    got = solve_basis(L)
    ref = reference_basis()
    for j, (g, r) in enumerate(zip(got, ref)):
        _require(g == r, f"Q{j} differs: {g}")
    # z^5 of the numerator over z^4
    q4_top = got[4].coeff(1)
    _require(q4_top == FieldElem(910, 406), f"Q4 numerator z^5 coefficient {q4_top}")
    return "Q0..Q4 coefficient-identical to the reference values"


def check_moment_vanishing() -> str:
    L = laurent_L()
    table = PowerTable(L)
    bounds = []
    for j, Q in enumerate(reference_basis()):
        rep = verify_solution(L, Q, ORBIT_SIZE, table=table)
        _require(rep.all_zero, f"Q{j}: moment {rep.first_nonzero_index} nonzero")
        _require(rep.checked_upper_bound == (ORBIT_SIZE - 1) * Q.span() + 1, f"Q{j}: wrong bound")
        bounds.append(rep.checked_upper_bound)
    _require(max(bounds) == 89, f"maximal bound {max(bounds)} != 89")
    return f"all moments vanish, bounds {bounds}"


def check_orbit_size() -> str:
    gens = monodromy_generators().values()
    size = orbit_size_N(gens, SPLIT_VECTOR)
    _require(size == ORBIT_SIZE, f"orbit size {size}")
    return f"orbit size {size}"


def check_frobenius_count() -> str:
    count = frobenius_count(10, CLASSES)
    _require(count == MAP_COUNT, f"count {count}")
    _require(count == 7 * 3_628_800, "count is not 7 * 10!")
    return f"{count} = 7 * 10!"


def check_group_facts() -> str:
    g = monodromy_generators()
    five = {
        "phi": Permutation.from_cycles("(1,2,3,4,5)", 5),
        "alpha": Permutation.from_cycles("(2,5)", 5),
        "sigma": Permutation.from_cycles("(1,2)(3,5,4)", 5),
    }
    for name, s in five.items():
        _require(edge_action(s) == g[name], f"edge action of {s} is {edge_action(s)}, not {g[name]}")
    _require(check_relation(g["sigma"], g["alpha"], g["phi"]), "sigma*alpha*phi != 1")
    order = group_order([g["alpha"], g["sigma"]])
    _require(order == 120, f"order {order}")
    gens = list(g.values())
    _require(is_transitive(gens), "not transitive")
    _require(is_primitive(gens), "not primitive")
    return "edge action matches, relation holds, order 120, transitive and primitive"


def check_subspaces() -> str:
    gens = list(monodromy_generators().values())
    v = fan_vectors()
    w = hamiltonian_vectors()
    _require([sum(c) for c in zip(*v)] == [2] * 10, "fans do not sum to 2")
    _require([sum(c) for c in zip(*w)] == [0] * 10, "Hamiltonian vectors do not sum to 0")
    _require(span_rank(v) == 5 and span_rank(w) == 5, "ranks are not 5 and 5")
    _require(all(sum(a * b for a, b in zip(x, y)) == 0 for x in v for y in w), "fans not orthogonal to w")
    ones = [(1,) * 10]
    diffs = [tuple(a - b for a, b in zip(vi, v[0])) for vi in v[1:]]
    dims = [span_rank(ones), span_rank(diffs), span_rank(w)]
    _require(dims == [1, 4, 5], f"dimensions {dims}")
    _require(span_rank(ones + diffs + w) == 10, "summands do not fill Q^10")
    for name, space in (("U1", ones), ("U4", diffs), ("U5", w)):
        _require(invariant_subspace_check(gens, space), f"{name} not invariant")

    def fix(img):
        return edge_action(Permutation(img)).fixed_points()

    norm = perm_character_norm(5, fix)
    _require(norm == 3, f"<pi,pi> = {norm}")
    return "dimensions 1+4+5 = 10, all invariant, <pi,pi> = 3"


def check_belyi() -> str:
    x = Polynomial.x()
    F1 = build_candidate(*F1_PARAMS)
    _require(ramification_profile(F1).as_dict() == _profile_dict(), "F1 profile")
    L = laurent_L()
    FL = laurent_as_rational(L)
    _require(ramification_profile(FL).as_dict() == _profile_dict(), "L profile")

    F2 = build_candidate(*F2_PARAMS)
    unnormalized = RationalFunction(
        x ** 6 * (x - 1) ** 3 * (x + 1) * 337500, Polynomial([-16, 4, 11]) ** 5
    )
    _require(F2 == unnormalized, "F2 does not match its form with denominator (11x^2+4x-16)^5")
    _require(ramification_profile(F2).as_dict() == _profile_dict(), "F2 profile")

    hs = h_structure(F1, 4, -1)
    _require(hs.p == Polynomial([6, -6, 2, 22]) == p_of(4, -1), f"p = {hs.p}")

    m = Mobius(*INVERSE_MOBIUS)
    _require(mobius_substitute(F1, m) == FL, "Mobius substitution does not give L")
    K, a, b = decompose_laurent_form(mobius_substitute(F1, m))
    _require((K, a, b) == (L_K, L_A, L_B), f"(K, a, b) = ({K}, {a}, {b})")
    return "F1, F2, L certified with (6,3,1)/(2,2,2,1,1,1,1)/(5,5); H = c p^2 q; F1 o m = L"


def _profile_dict() -> dict:
    return {"over_zero": list(PROFILE[0]), "over_one": list(PROFILE[1]), "over_infinity": list(PROFILE[2])}


def random_field_elem(rng: random.Random) -> FieldElem:
    return FieldElem(
        Fraction(rng.randint(-9, 9), rng.randint(1, 6)),
        Fraction(rng.randint(-9, 9), rng.randint(1, 6)),
    )


def random_r_polys(rng: random.Random, max_degree: int = 3) -> list[Polynomial]:
    return [
        Polynomial([random_field_elem(rng) for _ in range(rng.randint(0, max_degree + 1))])
        for _ in range(5)
    ]


def check_roundtrip(samples: int = 100, seed: int = 20080) -> str:
    rng = random.Random(seed)
    L = laurent_L()
    basis = reference_basis()
    Qs = []
    for s in range(samples):
        R = random_r_polys(rng)
        Q = reconstruct(R, basis, L)
        dec = decompose(Q, L, basis)
        _require(list(dec.r_polys) == R and not dec.remainder, f"sample {s}: roundtrip failed")
        Qs.append(Q)
    reports = verify_many(L, Qs, ORBIT_SIZE)
    bad = [k for k, r in enumerate(reports) if not r.all_zero]
    _require(not bad, f"samples {bad[:5]} fail moment verification")
    top = max(r.checked_upper_bound for r in reports)
    return f"{samples} roundtrips exact, all verified (largest bound {top})"


def check_rigidity() -> str:
    r = polynomial_rigidity_rank(laurent_L(), max_degree=8, rows=89)
    _require(r == 8, f"rank {r}")
    return "89 x 8 moment matrix has rank 8"


def brute_force_count(n: int, classes) -> int:
    """Tuples with prescribed cycle types and product 1, by enumeration of all but the last."""
    group = symmetric_group(n)
    types = [Partition.of(c) for c in classes]
    by_type: dict = {}
    for g in group:
        by_type.setdefault(g.cycle_type(), []).append(g)
    pools = [by_type.get(tuple(t), []) for t in types[:-1]]
    count = 0
    for combo in itertools.product(*pools):
        prod = combo[0]
        for g in combo[1:]:
            prod = prod * g
        if prod.inverse().cycle_type() == tuple(types[-1]):
            count += 1
    return count


def _parity(classes) -> int:
    return sum(sum(c) - len(c) for c in classes)


def check_frobenius_oracle(trials: int = 5, seed: int = 4) -> str:
    rng = random.Random(seed)
    classes = partitions(4)
    seen = []
    while len(seen) < trials:
        triple = [tuple(rng.choice(classes)) for _ in range(3)]
        if _parity(triple) % 2:
            continue  # odd total sign: both sides are trivially 0
        f, b = frobenius_count(4, triple), brute_force_count(4, triple)
        _require(f == b, f"{triple}: formula {f} vs enumeration {b}")
        seen.append(f)
    return f"{trials} class triples in S4 agree, counts {seen}"


def check_dessin(samples: int = 200) -> str:
    plot = render_dessin(build_candidate(*F1_PARAMS), samples=samples)
    _require(len(plot.arcs) == 10, f"{len(plot.arcs)} arcs")
    _require(plot.black_degrees() == [6, 3, 1], f"black degrees {plot.black_degrees()}")
    _require(plot.white_degrees() == [2, 2, 2, 1, 1, 1, 1], f"white degrees {plot.white_degrees()}")
    _require(not plot.warnings, "; ".join(plot.warnings))
    verts = plot.black_vertices + plot.white_vertices
    gap = min(abs(a.position - b.position) for a, b in itertools.combinations(verts, 2))
    _require(gap > VERTEX_TOL, f"vertices closer than {VERTEX_TOL}")
    return "10 arcs, black {6,3,1}, white {2,2,2,1,1,1,1}"


CHECKS: list[tuple[int, str, Callable[[], str]]] = [
    (1, "basis reproduction", check_basis),
    (2, "moment vanishing", check_moment_vanishing),
    (3, "orbit size", check_orbit_size),
    (4, "map count", check_frobenius_count),
    (5, "group facts", check_group_facts),
    (6, "invariant subspaces", check_subspaces),
    (7, "Belyi certification", check_belyi),
    (8, "decomposition roundtrip", check_roundtrip),
    (9, "rigidity rank", check_rigidity),
    (10, "count vs enumeration", check_frobenius_oracle),
    (11, "dessin render", check_dessin),
]


def run_check(number: int) -> CheckResult:
    for num, name, fn in CHECKS:
        if num == number:
            t0 = time.perf_counter()
            try:
                detail, ok = fn(), True
            except _Failed as exc:
                detail, ok = str(exc), False
            except Exception as exc:  # a crash is a failure, reported not raised
                detail, ok = f"{type(exc).__name__}: {exc}", False
            return CheckResult(num, name, ok, detail, time.perf_counter() - t0)
    raise KeyError(f"no check numbered {number}")


def run_all(numbers=None) -> list[CheckResult]:
    wanted = [n for n, _, _ in CHECKS] if numbers is None else list(numbers)
    return [run_check(n) for n in wanted]
