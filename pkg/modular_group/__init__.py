"""
Modular Group Module for SymCover.

SL2(Z) matrices, exact torus points, orbit enumeration, cusp decompositions
and Gamma_1(n) membership.
"""

from .matrices import (
    IntegerMatrix2, IDENTITY, MINUS_IDENTITY, S, T, GENERATORS,
    reduce_to_horizontal, random_word, gamma1_membership, check_primitive,
)
from .torus_points import TorusPoint, act, to_fraction
from .orbits import (
    OrbitSet, CuspPart, CuspDecomposition, orbit_enumerate, torsion_points,
    kernel_points, kernel_orbit_representatives, orbit_classes_on_kernel,
    cusp_decomposition, cusp_count_formula, unsigned_cusp_count,
)

__all__ = [
    "IntegerMatrix2",
    "IDENTITY",
    "MINUS_IDENTITY",
    "S",
    "T",
    "GENERATORS",
    "reduce_to_horizontal",
    "random_word",
    "gamma1_membership",
    "check_primitive",
    "TorusPoint",
    "act",
    "to_fraction",
    "OrbitSet",
    "CuspPart",
    "CuspDecomposition",
    "orbit_enumerate",
    "torsion_points",
    "kernel_points",
    "kernel_orbit_representatives",
    "orbit_classes_on_kernel",
    "cusp_decomposition",
    "cusp_count_formula",
    "unsigned_cusp_count",
]
