"""
The horizontal spine of the fiber: the unit segments from (j, k) to (j+1, k)
between lattice points of T^2_d. A twist on the spine has a horizontal saddle
connection between its two cone points, of length {t_h} to the left endpoint
and 1 - {t_h} to the right one.
"""
import logging
import math
from fractions import Fraction
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from modular_fiber.fiber_decomposition import lattice_class
from modular_group.orbits import OrbitSet
from utils.errors import DivisibilityError

logger = logging.getLogger(__name__)


class SpineSegment(BaseModel):
    model_config = ConfigDict(frozen=True)

    start: Tuple[int, int] = Field(..., description="Left lattice endpoint (j, k)")
    end: Tuple[int, int] = Field(..., description="Right lattice endpoint (j+1, k) mod d")
    start_class: int
    end_class: int

    @property
    def length(self) -> int:
        return 1

    def touches(self, m: int) -> bool:
        return m in (self.start_class, self.end_class)


class SpinePoint(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    x: Fraction
    y: Fraction
    segment: SpineSegment
    left_distance: Fraction = Field(..., description="{t_h}")
    right_distance: Fraction = Field(..., description="1 - {t_h}")


def _require_divisor(d: int, m: int) -> None:
    if m < 1 or d % m:
        raise DivisibilityError(f"m={m} does not divide d={d}")


def _segment(j: int, k: int, d: int) -> SpineSegment:
    end = ((j + 1) % d, k)
    return SpineSegment(start=(j, k), end=end, start_class=lattice_class(j, k, d),
                        end_class=lattice_class(end[0], k, d))


def all_spine_segments(d: int) -> List[SpineSegment]:
    """All d^2 segments, row by row."""
    return [_segment(j, k, d) for k in range(d) for j in range(d)]


def spine_segments(d: int, m: int) -> List[SpineSegment]:
    """
    Segments with at least one endpoint of class m.

    Raises:
        DivisibilityError: If m does not divide d.
    """
    _require_divisor(d, m)
    return [segment for segment in all_spine_segments(d) if segment.touches(m)]


def spine_points(orbit: OrbitSet, m: Optional[int] = None) -> List[SpinePoint]:
    """
    Orbit points lying on the open spine segments.

    Args:
        orbit (OrbitSet): A finite orbit on T^2_d.
        m (Optional[int]): Keep only segments with an endpoint of class m.

    Returns:
        List[SpinePoint]: One entry per point, with both endpoint distances.
    """
    d, N = orbit.modulus, orbit.denominator
    if m is not None:
        _require_divisor(d, m)
    result = []
    for X, Y in orbit.numerators.tolist():
        if Y % N or X % N == 0:
            continue
        j, k = X // N, Y // N
        segment = _segment(j, k, d)
        if m is not None and not segment.touches(m):
            continue
        offset = Fraction(X - j * N, N)
        result.append(SpinePoint(x=Fraction(X, N), y=Fraction(k), segment=segment,
                                 left_distance=offset, right_distance=1 - offset))
    logger.debug(f"{len(result)} orbit points on the spine of T^2_{d} (m={m})")
    return result


def spine_point_at(x: Fraction, y: Fraction, d: int) -> SpinePoint:
    """
    The spine segment through a twist (x, y) with y an integer and x not.

    Raises:
        ValueError: If the point is off the spine.
    """
    x, y = Fraction(x) % d, Fraction(y) % d
    if y.denominator != 1 or x.denominator == 1:
        raise ValueError(f"({x}, {y}) is not on the open spine")
    j = math.floor(x)
    offset = x - j
    return SpinePoint(x=x, y=y, segment=_segment(j, int(y), d),
                      left_distance=offset, right_distance=1 - offset)
