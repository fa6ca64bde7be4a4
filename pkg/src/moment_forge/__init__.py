"""Exact algebra for a Laurent polynomial whose moment problem has a
five-element basis of solutions, together with the group theory, character
count and Belyi-map checks that produce it."""
from __future__ import annotations

__version__ = "0.1.0"

from ._kernels import BACKEND
from .basis import solve_basis
from .belyi import (
    Mobius,
    RamificationProfile,
    RationalFunction,
    build_candidate,
    mobius_substitute,
    ramification_profile,
)
from .characters import Partition, frobenius_count, mn_character
from .counterexample import laurent_L, reference_basis
from .decompose import classify, decompose, reconstruct
from .dessin import render_dessin
from .laurent import LaurentPoly, Polynomial, parse_laurent
from .moments import MomentReport, PowerTable, moment, verify_many, verify_solution
from .numfield import FieldElem, parse_field
from .perm import Permutation, edge_action, group_order

__all__ = [
    "BACKEND",
    "FieldElem",
    "LaurentPoly",
    "Mobius",
    "MomentReport",
    "Partition",
    "Permutation",
    "Polynomial",
    "PowerTable",
    "RamificationProfile",
    "RationalFunction",
    "build_candidate",
    "classify",
    "decompose",
    "edge_action",
    "frobenius_count",
    "group_order",
    "laurent_L",
    "mn_character",
    "mobius_substitute",
    "moment",
    "parse_field",
    "parse_laurent",
    "ramification_profile",
    "reconstruct",
    "reference_basis",
    "render_dessin",
    "solve_basis",
    "verify_many",
    "verify_solution",
]
