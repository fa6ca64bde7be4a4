"""``moment-forge`` command line.

Every JSON payload carries ``"schema": 1``.  Exact values are written in the
``p/q+r/s*sqrt(d)`` text form; floats appear only in dessin output.
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
import time
from typing import Sequence

from . import __version__
from .basis import solve_basis
from .belyi import (
    DegenerateCandidateError,
    NotBelyiError,
    build_candidate,
    laurent_as_rational,
    ramification_profile,
)
from .characters import Partition, frobenius_contributions, frobenius_count
from .counterexample import F1_PARAMS, F2_PARAMS, ORBIT_SIZE, laurent_L, reference_basis
from .decompose import classify
from .dessin import render_dessin, summary
from .laurent import parse_laurent
from .moments import verify_solution
from .numfield import parse_field
from .perm import (
    check_relation,
    fan_vectors,
    find_blocks,
    group_order,
    hamiltonian_vectors,
    invariant_subspace_check,
    is_primitive,
    is_transitive,
    monodromy_generators,
    span_rank,
)

SCHEMA = 1
FUNCTIONS = ("F1", "F2", "L")
DEFAULT_CLASSES = "6,3,1; 2^3 1^4; 5,5"


class UsageError(Exception):
    """Bad input that argparse cannot catch; reported with exit code 2."""


def thread_cap() -> int:
    """Worker count: CPU count, capped by MOMENT_FORGE_THREADS when set."""
    cpus = os.cpu_count() or 1
    raw = os.environ.get("MOMENT_FORGE_THREADS")
    if not raw:
        return cpus
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"MOMENT_FORGE_THREADS must be an integer, got {raw!r}") from None
    return max(1, min(cpus, cap))


def _emit(payload: dict, out=None) -> None:
    text = json.dumps({"schema": SCHEMA, **payload}, indent=2)
    print(text, file=out or sys.stdout)


def _coeff_list(poly) -> list[str]:
    return [str(c) for c in poly.coeffs]


def _pick_function(label: str):
    if label == "F1":
        return build_candidate(*F1_PARAMS)
    if label == "F2":
        return build_candidate(*F2_PARAMS)
    return laurent_as_rational(laurent_L())


# subcommands


def cmd_solve_basis(args) -> int:
    basis = solve_basis(laurent_L(), workers=thread_cap())
    if args.json:
        _emit({
            "basis": [
                {"j": j, "text": str(q), "coeffs": {str(k): str(c) for k, c in q.terms()}}
                for j, q in enumerate(basis)
            ]
        })
    else:
        for j, q in enumerate(basis):
            print(f"Q{j} = {q}")
    return 0


def cmd_verify_moments(args) -> int:
    L = laurent_L()
    if args.laurent is not None:
        label, Q = args.laurent, _parse_laurent(args.laurent)
    else:
        label, Q = f"Q{args.j}", reference_basis()[args.j]
    t0 = time.perf_counter()
    rep = verify_solution(L, Q, args.N, full_scan=args.full_scan)
    payload = {
        "q_label": label,
        "N": args.N,
        "bound": rep.checked_upper_bound,
        "all_zero": rep.all_zero,
    }
    if rep.first_nonzero_index is not None:
        payload["first_nonzero_index"] = rep.first_nonzero_index
    payload["elapsed_ms"] = round(1000 * (time.perf_counter() - t0), 3)
    _emit(payload)
    return 0


def cmd_decompose(args) -> int:
    text = sys.stdin.read() if args.laurent == "-" else args.laurent
    Q = _parse_laurent(text)
    L = laurent_L()
    cls = classify(Q, L, reference_basis(), N=args.N)
    payload = {f"r{j}": _coeff_list(r) for j, r in enumerate(cls.decomposition.r_polys)}
    payload["remainder"] = _coeff_list(cls.decomposition.remainder)
    payload["is_solution"] = cls.is_solution
    if cls.witness is not None:
        payload["witness"] = cls.witness
    _emit(payload)
    return 0


def cmd_check_group(args) -> int:
    g = monodromy_generators()
    gens = list(g.values())
    v, w = fan_vectors(), hamiltonian_vectors()
    diffs = [tuple(a - b for a, b in zip(vi, v[0])) for vi in v[1:]]
    _emit({
        "generators": {name: str(p) for name, p in g.items()},
        "relation_sigma_alpha_phi": check_relation(g["sigma"], g["alpha"], g["phi"]),
        "order": group_order(gens),
        "order_alpha_sigma": group_order([g["alpha"], g["sigma"]]),
        "transitive": is_transitive(gens),
        "primitive": is_primitive(gens),
        "block_systems": find_blocks(gens),
        "subspaces": {
            "fans_rank": span_rank(v),
            "hamiltonian_rank": span_rank(w),
            "dimensions": [1, span_rank(diffs), span_rank(w)],
            "fans_invariant": invariant_subspace_check(gens, v),
            "difference_invariant": invariant_subspace_check(gens, diffs),
            "hamiltonian_invariant": invariant_subspace_check(gens, w),
        },
    })
    return 0


def cmd_count_maps(args) -> int:
    try:
        classes = [Partition.parse(c) for c in args.classes.split(";") if c.strip()]
    except ValueError as exc:
        raise UsageError(f"bad class list: {exc}") from None
    if not classes:
        raise UsageError("--classes needs at least one cycle type")
    n = classes[0].n
    try:
        count = frobenius_count(n, classes)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fact = math.factorial(n)
    _emit({
        "n": n,
        "classes": [list(c) for c in classes],
        "count": count,
        "count_over_n_factorial": str(count // fact) if count % fact == 0 else f"{count}/{fact}",
        "contributions": [
            {"lambda": list(lam), "value": str(val)}
            for lam, val in frobenius_contributions(n, classes)
            if val
        ],
    })
    return 0


def cmd_verify_belyi(args) -> int:
    if args.coeffs is not None:
        label = "K={} a={} b={}".format(*args.coeffs)
        try:
            F = build_candidate(*(_parse_elem(c) for c in args.coeffs))
        except DegenerateCandidateError as exc:
            _emit({"function": label, "certified": False, "error": str(exc)})
            return 0
    else:
        label, F = args.function, _pick_function(args.function)
    prof = ramification_profile(F, strict=False)
    payload = {
        "function": label,
        "degree": F.degree,
        "profile": prof.as_dict(),
        "ramification_total": prof.ramification_total(),
        "certified": prof.ramification_total() == 2 * F.degree - 2,
    }
    _emit(payload)
    return 0


def cmd_render_dessin(args) -> int:
    F = _pick_function(args.function)
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                plot = render_dessin(F, samples=args.samples, out=fh)
        else:
            plot = render_dessin(F, samples=args.samples)
    except NotBelyiError as exc:
        raise UsageError(str(exc)) from None
    info = summary(plot)
    info.pop("black_vertices")
    info.pop("white_vertices")
    _emit({"function": args.function, "samples": args.samples, "out": args.out, **info})
    return 0


def cmd_reproduce_all(args) -> int:
    from .reproduce import run_all

    only = None
    if args.only:
        try:
            only = [int(x) for x in args.only.split(",")]
        except ValueError:
            raise UsageError(f"--only expects comma-separated numbers, got {args.only!r}") from None
    try:
        results = run_all(only)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    ok = all(r.passed for r in results)
    if args.json:
        _emit({
            "criteria": [
                {"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
            "all_passed": ok,
        })
    else:
        width = max(len(r.name) for r in results)
        print(f"{'#':>2}  {'check':<{width}}  result  seconds")
        for r in results:
            print(f"{r.number:>2}  {r.name:<{width}}  {'PASS' if r.passed else 'FAIL':<6}  {r.seconds:7.2f}")
            if not r.passed:
                print(f"    {r.detail}")
        print(f"{sum(r.passed for r in results)}/{len(results)} passed")
    return 0 if ok else 1


# parsing helpers


def _parse_laurent(text: str):
    try:
        return parse_laurent(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse Laurent polynomial: {exc}") from None


def _parse_elem(text: str):
    try:
        return parse_field(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse field element {text!r}: {exc}") from None


def _j_index(text: str) -> int:
    j = int(text.lstrip("Qq"))
    if not 0 <= j <= 4:
        raise argparse.ArgumentTypeError("j must be between 0 and 4")
    return j


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="moment-forge",
        description="Exact verification of a Laurent polynomial with a five-element moment basis.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")

    s = sub.add_parser("solve-basis", help="solve for the basis Q0..Q4")
    s.add_argument("--json", action="store_true", help="emit JSON instead of text lines")
    s.set_defaults(func=cmd_solve_basis)

    s = sub.add_parser("verify-moments", help="check that the moments of Q vanish up to the bound")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--j", type=_j_index, default=4, help="basis element Q_j (default 4)")
    g.add_argument("--laurent", help="explicit Laurent polynomial in z")
    s.add_argument("--N", type=_positive, default=ORBIT_SIZE, help="orbit size N (default 12)")
    s.add_argument("--full-scan", action="store_true", help="do not stop at the first nonzero moment")
    s.set_defaults(func=cmd_verify_moments)

    s = sub.add_parser("decompose", help="write Q as sum R_j(L) Q_j")
    s.add_argument("laurent", help="Laurent polynomial in z, or '-' to read stdin")
    s.add_argument("--N", type=_positive, default=ORBIT_SIZE, help="orbit size for the moment check")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("check-group", help="group order, primitivity and invariant subspaces")
    s.set_defaults(func=cmd_check_group)

    s = sub.add_parser("count-maps", help="Frobenius count of factorizations")
    s.add_argument("--classes", default=DEFAULT_CLASSES,
                   help="';'-separated cycle types, e.g. '6,3,1; 2^3 1^4; 5,5'")
    s.set_defaults(func=cmd_count_maps)

    s = sub.add_parser("verify-belyi", help="ramification profile and Belyi certification")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--function", choices=FUNCTIONS, default="F1")
    g.add_argument("--coeffs", nargs=3, metavar=("K", "A", "B"),
                   help="K x^6 (x-1)^3 (x+1) / (x^2 + A x + B)^5")
    s.set_defaults(func=cmd_verify_belyi)

    s = sub.add_parser("render-dessin", help="draw the preimage of [0, 1] as SVG")
    s.add_argument("--function", choices=FUNCTIONS, default="F1")
    s.add_argument("--samples", type=_positive, default=200)
    s.add_argument("--out", help="SVG output path")
    s.set_defaults(func=cmd_render_dessin)

    s = sub.add_parser("reproduce-all", help="run every check and print a summary table")
    s.add_argument("--json", action="store_true")
    s.add_argument("--only", help="comma-separated check numbers")
    s.set_defaults(func=cmd_reproduce_all)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"moment-forge: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
