"""
Geometric tracer for straight-line flow on the slit model.

This is an oracle for the closed-form decomposition and deliberately does not
use it: leaves are walked on the plane, every crossing of the sheet-changing
chain is located explicitly, and cylinders are read off by following sheets
until they return.

For a primitive direction u = (p, q) the closed leaves of the base torus are
the level sets of f(x) = u x x (mod 1). The singular leaves are f = 0 (through
the cone point at the origin) and f = f(tau); the bands between them are
traced once each from their midpoints.
"""
import logging
import math
from fractions import Fraction
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field

from modular_group.matrices import check_primitive
from symmetric_surfaces.cylinder_decomposition import CylinderDecomposition, CylinderGroup
from symmetric_surfaces.surface_model import DSurface, cross, sheet_shift
from symmetric_surfaces.twist import Coordinate
from utils.errors import ConePointHitError

logger = logging.getLogger(__name__)


class CrossingEvent(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    position: Coordinate = Field(..., description="Flow time r in [0, 1) along one lap")
    piece: str = Field(..., description="'horizontal', 'vertical' or 'slit'")
    shift: int = Field(..., description="Sheet change at this crossing")


class LeafTrace(BaseModel):
    """One lap of a closed leaf on the base torus, with the sheet bookkeeping."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    direction: Tuple[int, int]
    start: Tuple[Coordinate, Coordinate]
    events: List[CrossingEvent]
    monodromy: int = Field(..., description="Net sheet shift per lap, mod d")
    cycles: List[List[int]] = Field(..., description="Sheets visited by each closed lift, in order")


def _is_integral(value, epsilon: float) -> bool:
    if isinstance(value, Fraction):
        return value.denominator == 1
    return abs(value - round(value)) < epsilon


def _floor(value) -> int:
    return int(math.floor(value))


def _ceil(value) -> int:
    return int(math.ceil(value))


def _grid_crossings(surface: DSurface, start, direction) -> List[CrossingEvent]:
    """Crossings with the loops x in Z (weight v) and y in Z (weight h) for r in [0, 1)."""
    events = []
    pieces = ((0, 'vertical', (0, 1), surface.v), (1, 'horizontal', (1, 0), surface.h))
    for axis, name, piece_direction, weight in pieces:
        step = direction[axis]
        if step == 0:
            continue
        origin = start[axis]
        low, high = sorted((origin, origin + step))
        for level in range(_ceil(low), _floor(high) + 1):
            r = (level - origin) / step
            if 0 <= r < 1:
                events.append(CrossingEvent(position=r, piece=name,
                                            shift=sheet_shift(piece_direction, weight, direction)))
    return events


def _slit_crossings(surface: DSurface, start, direction) -> List[CrossingEvent]:
    """Crossings with the translates z + s tau, 0 < s < 1, for r in [0, 1)."""
    tau = surface.slit
    delta = cross(direction, tau)
    if delta == 0:
        return []
    level = cross(direction, start)
    norm = direction[0] ** 2 + direction[1] ** 2
    shift = sheet_shift(tau, 1, direction)
    xs = [start[0], start[0] + direction[0]]
    ys = [start[1], start[1] + direction[1]]
    events = []
    for z1 in range(_floor(min(xs)) - 1, _ceil(max(xs)) + 1):
        for z2 in range(_floor(min(ys)) - 1, _ceil(max(ys)) + 1):
            m = cross(direction, (z1, z2))
            # the leaf meets the line through z and z + tau at s = (level - m) / delta
            s = (level - m) / delta
            if s <= 0 or s >= 1:
                if s == 0 or s == 1:
                    raise ConePointHitError(f"Leaf through {start} in direction {direction} hits a cone point")
                continue
            hit = (z1 + s * tau[0], z2 + s * tau[1])
            r = ((hit[0] - start[0]) * direction[0] + (hit[1] - start[1]) * direction[1]) / norm
            if 0 <= r < 1:
                events.append(CrossingEvent(position=r, piece='slit', shift=shift))
    return events


def trace_leaf(surface: DSurface, p: int, q: int, start: Tuple[Coordinate, Coordinate]) -> LeafTrace:
    """
    Walks one lap of the leaf through `start` in direction (p, q).

    Args:
        surface (DSurface): The surface.
        p (int): Direction, first coordinate.
        q (int): Direction, second coordinate; gcd(p, q) = 1.
        start (Tuple): Start point in the plane; Fractions for exact tracing.

    Returns:
        LeafTrace: Crossings in flow order, net monodromy and the sheet cycles.

    Raises:
        ConePointHitError: If the leaf is singular.
    """
    check_primitive(p, q)
    direction = (p, q)
    d = surface.d
    level = cross(direction, start)
    singular = (0, cross(direction, surface.slit))
    for value in singular:
        if _is_integral(level - value, surface.epsilon):
            raise ConePointHitError(f"Leaf through {start} in direction {direction} is singular")

    events = _grid_crossings(surface, start, direction) + _slit_crossings(surface, start, direction)
    events.sort(key=lambda event: event.position)
    positions = [event.position for event in events]
    grid_positions = [e.position for e in events if e.piece != 'slit']
    if len(set(grid_positions)) != len(grid_positions):
        raise ConePointHitError(f"Leaf through {start} passes a lattice point")
    if len(set(positions)) != len(positions):
        logger.debug(f"Simultaneous crossings on leaf through {start}")

    monodromy = sum(event.shift for event in events) % d
    cycles: List[List[int]] = []
    seen = [False] * d
    for first in range(d):
        if seen[first]:
            continue
        cycle = []
        sheet = first
        while not seen[sheet]:
            seen[sheet] = True
            cycle.append(sheet)
            for event in events:
                sheet = (sheet + event.shift) % d
        cycles.append(cycle)
    return LeafTrace(direction=direction, start=tuple(start), events=events,
                     monodromy=monodromy, cycles=cycles)


def band_boundaries(surface: DSurface, p: int, q: int) -> List[Coordinate]:
    """Sorted transverse levels of the singular leaves in [0, 1)."""
    level = cross((p, q), surface.slit)
    level = level - math.floor(level)
    if isinstance(level, float) and (level < surface.epsilon or 1 - level < surface.epsilon):
        level = 0.0
    zero = level * 0
    return [zero] if level == 0 else [zero, level]


def trace_decompose(surface: DSurface, p: int, q: int) -> CylinderDecomposition:
    """
    Cylinder decomposition found by tracing one leaf per band.

    Raises:
        NonPrimitiveDirectionError: For non-primitive (p, q).
        DegenerateSurfaceError: For a lattice twist.
    """
    check_primitive(p, q)
    surface.require_non_degenerate()
    norm = p * p + q * q
    levels = band_boundaries(surface, p, q)
    one = Fraction(1) if surface.exact else 1.0
    bounds = list(levels) + [levels[0] + one]
    groups = []
    for low, high in zip(bounds, bounds[1:]):
        middle = (low + high) / 2
        start = (-q * middle / norm, p * middle / norm)
        trace = trace_leaf(surface, p, q, start)
        circumference = len(trace.cycles[0])
        groups.append(CylinderGroup(count=len(trace.cycles), circumference=circumference,
                                    band=high - low, direction=(p, q)))
        logger.debug(f"Band ({low}, {high}) in direction ({p}, {q}): monodromy {trace.monodromy}, "
                     f"{len(trace.cycles)} cylinders of {circumference} laps")
    return CylinderDecomposition(direction=(p, q), groups=groups)
