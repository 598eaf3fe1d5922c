"""
The d-symmetric surface: d copies of the unit torus glued along a slit.

Sheets are indexed by Z/d. The cover is branched over 0 and over the base
point tau = ({t_h}, {t_v}), and a path changes sheet whenever it crosses the
chain h*a + v*b + sigma, where a is the horizontal loop y = 0, b the vertical
loop x = 0, sigma the segment from 0 to tau, h = [t_h] and v = [t_v]. Crossing
a piece with direction c' while moving along u shifts the sheet index by
-weight * sign(c' x u).
"""
import logging
import math
from typing import List, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from symmetric_surfaces.twist import Coordinate, TwistPoint
from utils.errors import DegenerateSurfaceError, NonDegenerateSurfaceError

logger = logging.getLogger(__name__)

DEFAULT_EPSILON = 1e-9


def cross(u: Tuple, w: Tuple):
    """z-component of u x w."""
    return u[0] * w[1] - u[1] * w[0]


def sign(value) -> int:
    return (value > 0) - (value < 0)


def sheet_shift(piece_direction: Tuple, weight: int, velocity: Tuple) -> int:
    """Sheet change when a path with `velocity` crosses a chain piece."""
    return -weight * sign(cross(piece_direction, velocity))


class DSurface(BaseModel):
    """A d-symmetric cover of the unit torus, fixed by its twist."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    d: int = Field(..., ge=1, description="Symmetry order, number of sheets")
    twist: TwistPoint = Field(..., description="Twist coordinates on T^2_d")
    degenerate: bool = Field(..., description="True iff the twist is a lattice point")
    h: int = Field(..., description="Integer part of t_h, weight of the horizontal loop")
    v: int = Field(..., description="Integer part of t_v, weight of the vertical loop")
    slit: Tuple[Coordinate, Coordinate] = Field(..., description="Fractional slit endpoint tau")
    epsilon: float = Field(default=DEFAULT_EPSILON, gt=0, description="Integer test tolerance for float twists")

    @property
    def exact(self) -> bool:
        return self.twist.exact

    @property
    def area(self) -> int:
        return self.d

    @property
    def genus(self) -> int:
        return self.d

    def require_non_degenerate(self) -> None:
        if self.degenerate:
            raise DegenerateSurfaceError(f"Twist {self.twist} is a lattice point: degenerate surface")

    def require_degenerate(self) -> None:
        if not self.degenerate:
            raise NonDegenerateSurfaceError(f"Twist {self.twist} is not a lattice point")


def _is_integer(value: Coordinate, epsilon: float) -> bool:
    if isinstance(value, float):
        return abs(value - round(value)) < epsilon
    return value.denominator == 1


def build(d: int, twist: Union[TwistPoint, Tuple], epsilon: float = DEFAULT_EPSILON) -> DSurface:
    """
    Builds the d-symmetric surface with the given twist.

    Args:
        d (int): Number of sheets, d >= 1.
        twist (Union[TwistPoint, Tuple]): Twist point or (t_h, t_v) pair; it is
            renormalised modulo d Z^2.
        epsilon (float): Tolerance for integer tests on float twists.

    Returns:
        DSurface: The surface; degenerate when the twist lies on Z^2.
    """
    if isinstance(twist, TwistPoint):
        twist = twist.with_modulus(d)
    else:
        twist = TwistPoint(t_h=twist[0], t_v=twist[1], modulus=d)
    degenerate = _is_integer(twist.t_h, epsilon) and _is_integer(twist.t_v, epsilon)
    if degenerate and not twist.exact:
        twist = TwistPoint(t_h=round(twist.t_h), t_v=round(twist.t_v), modulus=d)
    surface = DSurface(d=d, twist=twist, degenerate=degenerate, h=twist.h, v=twist.v,
                       slit=twist.fractional, epsilon=epsilon)
    logger.debug(f"Built d={d} surface with twist {twist} (degenerate={degenerate})")
    return surface


class ConeData(BaseModel):
    model_config = ConfigDict(frozen=True)

    cone_points: int = Field(..., description="Number of points over the two branch values")
    cone_angles: List[float] = Field(..., description="Cone angle of each point, in radians")
    zero_orders: List[int] = Field(..., description="Order of the zero of the 1-form at each point")
    genus: int
    local_monodromy: Tuple[int, int] = Field(..., description="Sheet shift of a small loop around 0 and around tau")


def _rays_at(surface: DSurface, at_origin: bool) -> List[Tuple[Tuple, Tuple, int]]:
    """Chain pieces leaving a branch point, as (ray direction, piece direction, weight)."""
    tau = surface.slit
    rays = []
    on_horizontal = at_origin or tau[1] == 0
    on_vertical = at_origin or tau[0] == 0
    if on_horizontal:
        rays += [((1, 0), (1, 0), surface.h), ((-1, 0), (1, 0), surface.h)]
    if on_vertical:
        rays += [((0, 1), (0, 1), surface.v), ((0, -1), (0, 1), surface.v)]
    if at_origin:
        rays.append((tau, tau, 1))
    else:
        rays.append(((-tau[0], -tau[1]), tau, 1))
    return rays


def local_monodromy(surface: DSurface, at_origin: bool) -> int:
    """
    Sheet shift of a small counter-clockwise loop around a branch point,
    summed over the chain rays the loop crosses.
    """
    total = 0
    for ray, piece, weight in _rays_at(surface, at_origin):
        velocity = (-ray[1], ray[0])
        total += sheet_shift(piece, weight, velocity)
    return total % surface.d


def cone_data(surface: DSurface) -> ConeData:
    """
    Cone points, angles and genus, with the genus recomputed by Riemann-Hurwitz
    from the traced local monodromy.

    Raises:
        DegenerateSurfaceError: When the two branch points coincide.
    """
    surface.require_non_degenerate()
    d = surface.d
    shifts = (local_monodromy(surface, True), local_monodromy(surface, False))
    angles: List[float] = []
    orders: List[int] = []
    euler = 0
    for shift in shifts:
        preimages = math.gcd(shift, d)
        ramification = d // preimages
        angles += [2 * math.pi * ramification] * preimages
        orders += [ramification - 1] * preimages
        euler -= d - preimages
    genus = 1 - euler // 2
    if genus != surface.genus:
        logger.warning(f"Riemann-Hurwitz genus {genus} differs from d={d}")
    return ConeData(cone_points=len(angles), cone_angles=angles, zero_orders=orders,
                    genus=genus, local_monodromy=shifts)


class DegenerateStructure(BaseModel):
    """One-point union of tori obtained at a lattice twist (j, k)."""
    model_config = ConfigDict(frozen=True)

    components: int
    component_area: int
    horizontal_cylinders_per_component: int
    horizontal_width: int
    vertical_cylinders_per_component: int
    vertical_width: int
    sheet_components: List[List[int]] = Field(..., description="Sheets of each component, from monodromy connectivity")


def sheet_components(d: int, generators: List[int]) -> List[List[int]]:
    """Connected components of Z/d under the given translations."""
    component = [-1] * d
    groups: List[List[int]] = []
    for start in range(d):
        if component[start] >= 0:
            continue
        label = len(groups)
        members = []
        stack = [start]
        component[start] = label
        while stack:
            sheet = stack.pop()
            members.append(sheet)
            for step in generators:
                for nxt in ((sheet + step) % d, (sheet - step) % d):
                    if component[nxt] < 0:
                        component[nxt] = label
                        stack.append(nxt)
        groups.append(sorted(members))
    return groups


def components(surface: DSurface) -> DegenerateStructure:
    """
    Structure of a degenerate surface with lattice twist (j, k).

    The closed-form counts are cross-checked against connectivity of the
    sheets under the horizontal monodromy +k and the vertical monodromy -j.

    Raises:
        NonDegenerateSurfaceError: For a twist off the lattice.
    """
    surface.require_degenerate()
    d = surface.d
    j, k = surface.h % d, surface.v % d
    count = math.gcd(math.gcd(j, k), d)
    horizontal = math.gcd(k, d)
    vertical = math.gcd(j, d)
    groups = sheet_components(d, [k, -j])
    if len(groups) != count:
        logger.error(f"Monodromy gives {len(groups)} components, formula gives {count}")
    return DegenerateStructure(
        components=len(groups),
        component_area=d // count,
        horizontal_cylinders_per_component=horizontal // count,
        horizontal_width=d // horizontal,
        vertical_cylinders_per_component=vertical // count,
        vertical_width=d // vertical,
        sheet_components=groups,
    )
