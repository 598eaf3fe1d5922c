"""
Saddle connections from the cone point over 0 to the cone point over tau.

On the base torus such a connection is a straight segment from 0 to a lift
v = tau + z, z in Z^2, whose interior avoids both Z^2 and tau + Z^2. Each base
segment has d lifts to the cover. A surface degenerating along v collapses
onto the lattice twist t - v, whose gcd class with d labels the family.
"""
import logging
import math
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from number_theory.arithmetic_functions import gcd3
from symmetric_surfaces.surface_model import DSurface
from symmetric_surfaces.twist import Coordinate
from utils.errors import DivisibilityError, DomainError

logger = logging.getLogger(__name__)


class SaddleConnection(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    holonomy: Tuple[Coordinate, Coordinate] = Field(..., description="Base holonomy v = tau + z")
    lattice_offset: Tuple[int, int] = Field(..., description="z, the integer part of the holonomy")
    base_multiplicity: int = Field(..., ge=1, description="Number of lifts to the cover, d")
    m_class: int = Field(..., ge=1, description="gcd of the degenerate twist t - v with d")

    @property
    def length(self) -> float:
        return math.hypot(float(self.holonomy[0]), float(self.holonomy[1]))


def holonomy_class(surface: DSurface, z1: int, z2: int) -> int:
    """gcd(h - z1, v - z2, d): class of the lattice point the surface degenerates to."""
    return gcd3(surface.h - z1, surface.v - z2, surface.d)


def is_visible(surface: DSurface, z1: int, z2: int) -> bool:
    """
    Whether the open segment from 0 to tau + z misses Z^2 and tau + Z^2.

    For a twist of base order N the segment is blocked exactly when
    gcd(N (tau + z)) exceeds N. Floating twists are in general position.
    """
    if not surface.exact:
        return True
    order = surface.twist.base_order
    tau = surface.slit
    w1 = int(order * (tau[0] + z1))
    w2 = int(order * (tau[1] + z2))
    return math.gcd(w1, w2) < order


def saddle_connections_upto(surface: DSurface, T: float, m_filter: Optional[int] = None) -> List[SaddleConnection]:
    """
    Saddle connections starting at the cone point over 0 with |v| <= T.

    Each base segment is listed once; the reversed connection (holonomy -v)
    and the d lifts are accounted for by the counters.

    Args:
        surface (DSurface): A non-degenerate surface.
        T (float): Length bound.
        m_filter (Optional[int]): Keep only connections of this class; must divide d.

    Returns:
        List[SaddleConnection]: Sorted by length.

    Raises:
        DegenerateSurfaceError: For a lattice twist.
        DivisibilityError: If m_filter does not divide d.
    """
    surface.require_non_degenerate()
    if T <= 0:
        raise DomainError(f"T must be positive, got {T}")
    if m_filter is not None and (m_filter < 1 or surface.d % m_filter):
        raise DivisibilityError(f"m={m_filter} does not divide d={surface.d}")
    tau = surface.slit
    bound = float(T) * float(T)
    reach = int(math.ceil(T)) + 1
    connections = []
    for z1 in range(-reach, reach + 1):
        x = tau[0] + z1
        if float(x) * float(x) > bound:
            continue
        for z2 in range(-reach, reach + 1):
            y = tau[1] + z2
            if x * x + y * y > bound:
                continue
            if not is_visible(surface, z1, z2):
                continue
            m = holonomy_class(surface, z1, z2)
            if m_filter is not None and m != m_filter:
                continue
            connections.append(SaddleConnection(holonomy=(x, y), lattice_offset=(z1, z2),
                                                base_multiplicity=surface.d, m_class=m))
    connections.sort(key=lambda c: (c.length, c.lattice_offset))
    logger.debug(f"{len(connections)} saddle connections up to T={T} on d={surface.d} surface")
    return connections
