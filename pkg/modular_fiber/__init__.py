"""
Modular Fiber Module for SymCover.

The fiber T^2_d of d-symmetric covers: its horizontal cylinders, how orbits
meet them, lattice-point classes and the horizontal spine.
"""

from .fiber_decomposition import (
    FiberCylinder, FiberDecomposition, CylinderIntersection, WidthList,
    fiber_cylinder_index, build_fiber_decomposition, leaf_torsion_count, leaf_torsion_points,
    orbit_cylinder_intersections, lattice_class, lattice_class_counts, width_inverse_square_sum,
)
from .spine import SpineSegment, SpinePoint, all_spine_segments, spine_segments, spine_points, spine_point_at

__all__ = [
    "FiberCylinder",
    "FiberDecomposition",
    "CylinderIntersection",
    "WidthList",
    "fiber_cylinder_index",
    "build_fiber_decomposition",
    "leaf_torsion_count",
    "leaf_torsion_points",
    "orbit_cylinder_intersections",
    "lattice_class",
    "lattice_class_counts",
    "width_inverse_square_sum",
    "SpineSegment",
    "SpinePoint",
    "all_spine_segments",
    "spine_segments",
    "spine_points",
    "spine_point_at",
]
