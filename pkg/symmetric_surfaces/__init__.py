"""
Symmetric Surfaces Module for SymCover.

d-symmetric torus covers: twist coordinates, the slit model, closed-form and
traced cylinder decompositions, cone data, degenerate limits and saddle
connections.
"""

from .twist import Coordinate, TwistPoint, parse_twist
from .surface_model import (
    DSurface, ConeData, DegenerateStructure, build, cone_data, components,
    sheet_components, local_monodromy, cross, sheet_shift,
)
from .cylinder_decomposition import (
    CylinderGroup, CylinderDecomposition, SimpleDirection, decompose_direction,
    transformed_vertical_twist, split_vertical_twist, simple_direction_data,
)
from .flow_tracer import CrossingEvent, LeafTrace, trace_leaf, trace_decompose, band_boundaries
from .saddle_connections import SaddleConnection, saddle_connections_upto, holonomy_class, is_visible

__all__ = [
    "Coordinate",
    "TwistPoint",
    "parse_twist",
    "DSurface",
    "ConeData",
    "DegenerateStructure",
    "build",
    "cone_data",
    "components",
    "sheet_components",
    "local_monodromy",
    "cross",
    "sheet_shift",
    "CylinderGroup",
    "CylinderDecomposition",
    "SimpleDirection",
    "decompose_direction",
    "transformed_vertical_twist",
    "split_vertical_twist",
    "simple_direction_data",
    "CrossingEvent",
    "LeafTrace",
    "trace_leaf",
    "trace_decompose",
    "band_boundaries",
    "SaddleConnection",
    "saddle_connections_upto",
    "holonomy_class",
    "is_visible",
]
