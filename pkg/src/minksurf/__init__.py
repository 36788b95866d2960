"""Toolkit for space-like stationary surfaces in 4D Lorentz-Minkowski space.

Builds surfaces from Weierstrass data (two meromorphic Gauss-map components
and a height differential), validates the regularity and period conditions,
solves the anti-holomorphic fixed set E_f, and audits ramification/unicity
bounds for the Gauss maps on concrete examples.
"""

from .cplane import (
    INF,
    DegeneracyClass,
    ExtendedComplex,
    MobiusTransform,
    as_point,
    chordal,
    classify_conjugate_similarity,
    mobius_apply,
    q11_pairing,
)
from .efset import AdmissibilityReport, EfSet, admissibility_check, ef_solve
from .ratfun import (
    Circle,
    Divisor,
    Holomorphic1Form,
    Polyline,
    Polynomial,
    RationalFunction,
    conjugate_coeffs,
    contour_integral,
    count_zeros_in_disk,
    divisor_at,
    residue_loop_integral,
    roots_with_multiplicity,
)

__version__ = "0.1.0"

__all__ = [
    "INF",
    "AdmissibilityReport",
    "Circle",
    "DegeneracyClass",
    "Divisor",
    "EfSet",
    "ExtendedComplex",
    "Holomorphic1Form",
    "MobiusTransform",
    "Polyline",
    "Polynomial",
    "RationalFunction",
    "admissibility_check",
    "as_point",
    "chordal",
    "classify_conjugate_similarity",
    "conjugate_coeffs",
    "contour_integral",
    "count_zeros_in_disk",
    "divisor_at",
    "ef_solve",
    "mobius_apply",
    "q11_pairing",
    "residue_loop_integral",
    "roots_with_multiplicity",
]
