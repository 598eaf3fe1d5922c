"""
Cylinder structure of the modular fiber T^2_d minus its lattice.

Horizontally the fiber splits into d cylinders C_0, ..., C_{d-1}, where C_i
holds the twists with [t_v] = i. Every surface inside C_i has the same
horizontal widths, and so does every surface on its bottom boundary t_v = i.
"""
import logging
import math
from collections import Counter
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from modular_group.orbits import OrbitSet
from number_theory.arithmetic_functions import euler_phi, gcd3
from symmetric_surfaces.twist import TwistPoint
from utils.errors import DomainError

logger = logging.getLogger(__name__)

WidthList = List[Tuple[int, int]]


def _width_entry(i: int, d: int) -> Tuple[int, int]:
    k = math.gcd(i, d)
    return k, d // k


def width_inverse_square_sum(widths: WidthList) -> Fraction:
    """sum over cylinders of 1/w^2, each (count, width) entry weighted by its count."""
    return sum((Fraction(count, width * width) for count, width in widths), Fraction(0))


class FiberCylinder(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=0)
    area: int = Field(..., description="Area of C_i, always d")
    interior_widths: WidthList = Field(..., description="(count, width) of horizontal cylinders for twists inside C_i")
    boundary_widths: WidthList = Field(..., description="(count, width) for twists on the bottom boundary t_v = i")

    @property
    def interior_weight(self) -> Fraction:
        return width_inverse_square_sum(self.interior_widths)

    @property
    def boundary_weight(self) -> Fraction:
        return width_inverse_square_sum(self.boundary_widths)


class FiberDecomposition(BaseModel):
    """The d fiber cylinders. The fiber is a flat torus, so no cone-point data is kept."""
    model_config = ConfigDict(frozen=True)

    d: int = Field(..., ge=1)
    cylinders: List[FiberCylinder]

    @property
    def area(self) -> int:
        return sum(cylinder.area for cylinder in self.cylinders)


def fiber_cylinder_index(twist: TwistPoint, epsilon: float = 0.0) -> Tuple[int, bool]:
    """
    Fiber cylinder holding the twist: ([t_v] mod d, whether t_v is an integer).

    Args:
        twist (TwistPoint): Twist on T^2_d; its modulus is d.
        epsilon (float): Tolerance for the integer test on float twists.
    """
    t_v = twist.t_v
    if isinstance(t_v, Fraction):
        on_boundary = t_v.denominator == 1
        index = math.floor(t_v)
    else:
        nearest = round(t_v)
        on_boundary = abs(t_v - nearest) <= epsilon
        index = nearest if on_boundary else math.floor(t_v)
    return int(index) % twist.modulus, on_boundary


def build_fiber_decomposition(d: int) -> FiberDecomposition:
    """
    The horizontal decomposition of the fiber for d-symmetric covers.

    Args:
        d (int): Symmetry order, d >= 1.

    Returns:
        FiberDecomposition: C_i with interior widths from gcd(i, d) and
        gcd(i+1, d), and boundary widths from gcd(i, d) alone.
    """
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    cylinders = []
    for i in range(d):
        interior = [_width_entry(i, d), _width_entry(i + 1, d)]
        cylinders.append(FiberCylinder(index=i, area=d, interior_widths=interior,
                                       boundary_widths=[_width_entry(i, d)]))
    return FiberDecomposition(d=d, cylinders=cylinders)


def leaf_torsion_count(d: int, n: int, a: int) -> int:
    """Number of order-n points of T^2_d on the leaf t_v = a d / n: n phi(g)/g, g = gcd(a, n)."""
    if n < 1 or not 1 <= a <= n:
        raise DomainError(f"need 1 <= a <= n, got a={a}, n={n}")
    g = math.gcd(a, n)
    return n * euler_phi(g) // g


def leaf_torsion_points(orbit: OrbitSet, a: int, n: int) -> int:
    """Orbit points whose t_v equals a d / n mod d, counted by scanning the orbit."""
    d, N = orbit.modulus, orbit.denominator
    target = Fraction(a * d, n) % d * N
    if target.denominator != 1:
        return 0
    return int(np.count_nonzero(orbit.numerators[:, 1] == int(target)))


class CylinderIntersection(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int
    interior: int = Field(..., ge=0, description="|O n C_i|")
    boundary: int = Field(..., ge=0, description="|O n bottom boundary of C_i|, lattice points included")
    lattice: int = Field(default=0, ge=0, description="Boundary points that are lattice points")


def orbit_cylinder_intersections(orbit: OrbitSet, d: int) -> List[CylinderIntersection]:
    """
    Per fiber cylinder, how many orbit points lie inside it and on its bottom boundary.

    Raises:
        DomainError: If the orbit does not live on T^2_d.
    """
    if orbit.modulus != d:
        raise DomainError(f"Orbit lives on T^2_{orbit.modulus}, not T^2_{d}")
    N = orbit.denominator
    X, Y = orbit.numerators[:, 0], orbit.numerators[:, 1]
    index = (Y // N) % d
    on_boundary = Y % N == 0
    on_lattice = on_boundary & (X % N == 0)
    interior = np.bincount(index[~on_boundary], minlength=d)
    boundary = np.bincount(index[on_boundary], minlength=d)
    lattice = np.bincount(index[on_lattice], minlength=d)
    return [CylinderIntersection(index=i, interior=int(interior[i]), boundary=int(boundary[i]),
                                 lattice=int(lattice[i])) for i in range(d)]


def lattice_class(j: int, k: int, d: int) -> int:
    """gcd(j, k, d), with gcd(0, 0, d) = d."""
    return gcd3(j, k, d)


def lattice_class_counts(d: int) -> Dict[int, int]:
    """How many lattice points of Z^2 / d Z^2 fall in each class m | d."""
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    counts = Counter(lattice_class(j, k, d) for j in range(d) for k in range(d))
    return dict(sorted(counts.items()))
