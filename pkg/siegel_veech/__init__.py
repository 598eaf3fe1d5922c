"""
Siegel-Veech Module for SymCover.

Closed-form quadratic growth constants for cylinders and saddle connections
of d-symmetric covers, generic and torsion, with their fiber-level
derivations.
"""

from .constants import Constant, Transcendental, GROWTH_FACTOR, rational
from .cylinder_constants import (
    AreaMode, TableRow, PrimeTableRow,
    generic_cylinder_constant, generic_cylinder_constant_gcd_form, generic_cylinder_constant_divisor_form,
    torsion_leaf_term, torsion_cylinder_constant, d2_closed_form, d2_reconciled_form,
    generic_from_fiber, finite_orbit_from_fiber, area_restricted_constant, prime_table_rows,
)
from .saddle_constants import (
    SumConvention, SpinePart, ConvergenceRow,
    generic_saddle_constant, generic_cover_saddle_constant, saddle_torsion_constant, cover_saddle_constant,
    m_homologous_generic, m_homologous_finite, m_homologous_endpoint,
    d2_limit, d2_spine_parts, d2_convergence_sequence,
)
from .veech_rates import single_cusp_veech_constant, gutkin_judge_rate

__all__ = [
    "Constant",
    "Transcendental",
    "GROWTH_FACTOR",
    "rational",
    "AreaMode",
    "TableRow",
    "PrimeTableRow",
    "generic_cylinder_constant",
    "generic_cylinder_constant_gcd_form",
    "generic_cylinder_constant_divisor_form",
    "torsion_leaf_term",
    "torsion_cylinder_constant",
    "d2_closed_form",
    "d2_reconciled_form",
    "generic_from_fiber",
    "finite_orbit_from_fiber",
    "area_restricted_constant",
    "prime_table_rows",
    "SumConvention",
    "SpinePart",
    "ConvergenceRow",
    "generic_saddle_constant",
    "generic_cover_saddle_constant",
    "saddle_torsion_constant",
    "cover_saddle_constant",
    "m_homologous_generic",
    "m_homologous_finite",
    "m_homologous_endpoint",
    "d2_limit",
    "d2_spine_parts",
    "d2_convergence_sequence",
    "single_cusp_veech_constant",
    "gutkin_judge_rate",
]
