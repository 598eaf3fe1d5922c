"""
Cylinder decompositions of d-symmetric surfaces in rational directions.

A direction (p, q) is made horizontal by the canonical reduction matrix A.
Only the new vertical twist t_v' = p t_v - q t_h (mod d) matters: with
i = [t_v'], the surface has gcd(i, d) cylinders of circumference d/gcd(i, d)
laps and, when t_v' is not an integer, gcd(i+1, d) cylinders of
circumference d/gcd(i+1, d) laps. The i+1 group fills area d {t_v'}.
"""
import logging
import math
from fractions import Fraction
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from modular_group.matrices import check_primitive, reduce_to_horizontal
from symmetric_surfaces.surface_model import DSurface
from symmetric_surfaces.twist import Coordinate

logger = logging.getLogger(__name__)

HEIGHT_TOLERANCE = 1e-12


class CylinderGroup(BaseModel):
    """
    `count` parallel cylinders sharing circumference and height.

    The circumference is measured in laps of the base direction and the band
    is the transverse extent in units of the unit torus, so width and height
    follow from the direction length.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    count: int = Field(..., ge=1)
    circumference: int = Field(..., ge=1, description="Core length in multiples of |(p, q)|")
    band: Coordinate = Field(..., description="Transverse thickness; height is band / |(p, q)|")
    direction: Tuple[int, int]

    @property
    def direction_length(self) -> float:
        return math.hypot(*self.direction)

    @property
    def width(self) -> float:
        return self.circumference * self.direction_length

    @property
    def height(self) -> float:
        return float(self.band) / self.direction_length

    @property
    def area(self) -> Coordinate:
        """count * width * height, exact for rational twists."""
        return self.count * self.circumference * self.band

    def key(self) -> Tuple[int, int, Coordinate]:
        return self.count, self.circumference, self.band


class CylinderDecomposition(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    direction: Tuple[int, int]
    groups: List[CylinderGroup]

    @property
    def total_area(self) -> Coordinate:
        return sum((group.area for group in self.groups), Fraction(0))

    @property
    def cylinder_count(self) -> int:
        return sum(group.count for group in self.groups)

    def signature(self) -> List[Tuple[int, int, Coordinate]]:
        return sorted((group.key() for group in self.groups), key=lambda k: (k[0], k[1], float(k[2])))

    def shape(self) -> List[Tuple[int, int]]:
        """Sorted multiset of (count, circumference) pairs."""
        return sorted((group.count, group.circumference) for group in self.groups)

    def matches(self, other: 'CylinderDecomposition', tolerance: float = HEIGHT_TOLERANCE) -> bool:
        """Same (count, circumference) multiset and bands equal within tolerance."""
        mine, theirs = self.signature(), other.signature()
        if len(mine) != len(theirs):
            return False
        for (c1, w1, b1), (c2, w2, b2) in zip(mine, theirs):
            if c1 != c2 or w1 != w2 or abs(float(b1) - float(b2)) > tolerance:
                return False
        return True

    def describe(self) -> str:
        return ", ".join(f"{g.count}x(w={g.width:.6g}, h={g.height:.6g})" for g in self.groups)


def transformed_vertical_twist(surface: DSurface, p: int, q: int) -> Coordinate:
    """t_v' = second coordinate of A (t_h, t_v), reduced mod d."""
    A = reduce_to_horizontal(p, q)
    _, t_v = A.apply(surface.twist.t_h, surface.twist.t_v)
    value = t_v % surface.d
    if isinstance(value, float) and value >= surface.d:
        value = 0.0
    return value


def split_vertical_twist(surface: DSurface, t_v: Coordinate) -> Tuple[int, Coordinate]:
    """(i, {t_v'}) with float values within epsilon of an integer snapped onto it."""
    i = int(math.floor(t_v))
    frac = t_v - i
    if isinstance(frac, float):
        if frac < surface.epsilon:
            frac = 0.0
        elif 1.0 - frac < surface.epsilon:
            i, frac = i + 1, 0.0
    return i % surface.d, frac


def _group(count_index: int, d: int, band: Coordinate, direction: Tuple[int, int]) -> CylinderGroup:
    k = math.gcd(count_index, d)
    return CylinderGroup(count=k, circumference=d // k, band=band, direction=direction)


def decompose_direction(surface: DSurface, p: int, q: int) -> CylinderDecomposition:
    """
    Closed-form cylinder decomposition in the direction (p, q).

    Args:
        surface (DSurface): A non-degenerate surface.
        p (int): Direction, first coordinate.
        q (int): Direction, second coordinate; gcd(p, q) = 1.

    Returns:
        CylinderDecomposition: One group, or two groups with areas d(1 - {t_v'}) and d {t_v'}.

    Raises:
        NonPrimitiveDirectionError: For non-primitive (p, q).
        DegenerateSurfaceError: For a lattice twist.
    """
    check_primitive(p, q)
    surface.require_non_degenerate()
    d = surface.d
    i, frac = split_vertical_twist(surface, transformed_vertical_twist(surface, p, q))
    one = Fraction(1) if surface.exact else 1.0
    if frac == 0:
        groups = [_group(i, d, one, (p, q))]
    else:
        groups = [_group(i, d, one - frac, (p, q)), _group((i + 1) % d, d, frac, (p, q))]
    return CylinderDecomposition(direction=(p, q), groups=groups)


class SimpleDirection(BaseModel):
    model_config = ConfigDict(frozen=True)

    simple: bool = Field(..., description="All cylinders form one Z/d orbit")
    cylinders: int
    boundary_index: Optional[int] = Field(default=None, description="m with A t on the boundary line t_v = m")
    k: Optional[int] = Field(default=None, description="gcd(m, d), the number of cylinders when simple")


def simple_direction_data(surface: DSurface, p: int, q: int) -> SimpleDirection:
    """
    Whether (p, q) is a simple direction, i.e. the transformed twist sits on
    the boundary line t_v' = m of the fiber, giving k = gcd(m, d) cylinders
    that the deck group permutes transitively.
    """
    decomposition = decompose_direction(surface, p, q)
    i, frac = split_vertical_twist(surface, transformed_vertical_twist(surface, p, q))
    if frac != 0:
        return SimpleDirection(simple=False, cylinders=decomposition.cylinder_count)
    return SimpleDirection(simple=True, cylinders=decomposition.cylinder_count,
                           boundary_index=i, k=math.gcd(i, surface.d))
