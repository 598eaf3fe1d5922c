"""
Cylinder Siegel-Veech constants of d-symmetric covers.

Every constant here is an average of sum_k 1/w_k^2 over the horizontal
cylinders of the surfaces in an SL2(Z)-invariant set: the whole fiber for a
generic twist, a finite orbit for a torsion twist.
"""
import logging
import math
from enum import Enum
from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from modular_fiber.fiber_decomposition import (
    FiberDecomposition, build_fiber_decomposition, orbit_cylinder_intersections, width_inverse_square_sum,
)
from modular_group.orbits import OrbitSet, torsion_points
from number_theory.arithmetic_functions import dedekind_psi, divisors, euler_phi, factorize, orbit_size
from siegel_veech.constants import Constant, rational
from utils.errors import DegenerateSurfaceError, DomainError

logger = logging.getLogger(__name__)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


def generic_cylinder_constant_gcd_form(d: int) -> Fraction:
    """(2 / d^3) sum_{i=1}^{d} gcd(i, d)^3."""
    _require(d >= 1, f"d must be >= 1, got {d}")
    return Fraction(2 * sum(math.gcd(i, d) ** 3 for i in range(1, d + 1)), d ** 3)


def generic_cylinder_constant_divisor_form(d: int) -> Fraction:
    """2 sum_{p | d} phi(p) / p^3."""
    _require(d >= 1, f"d must be >= 1, got {d}")
    return 2 * sum((Fraction(euler_phi(p), p ** 3) for p in divisors(d)), Fraction(0))


def generic_cylinder_constant(d: int) -> Constant:
    """
    Cylinder constant of a d-symmetric cover with a twist of infinite orbit.

    Both closed forms are evaluated and must agree.

    Args:
        d (int): Symmetry order.

    Returns:
        Constant: The exact rational constant, e.g. 9/4 for d = 2.
    """
    gcd_form = generic_cylinder_constant_gcd_form(d)
    divisor_form = generic_cylinder_constant_divisor_form(d)
    if gcd_form != divisor_form:
        raise ArithmeticError(f"Closed forms disagree for d={d}: {gcd_form} != {divisor_form}")
    return rational(gcd_form, f"generic cylinder constant, d={d}")


def _leaf_weight(d: int, n: int, a: int) -> Fraction:
    """sum 1/w^2 for the horizontal cylinders of a surface on the leaf t_v = a d / n."""
    t_v, remainder = divmod(a * d, n)
    total = math.gcd(t_v, d) ** 3
    if remainder:
        total += math.gcd(t_v + 1, d) ** 3
    return Fraction(total, d * d)


def torsion_leaf_term(d: int, n: int, a: int) -> Fraction:
    """
    Contribution of the leaf t_v = a d / n to the order-n constant.

    n / (phi(n) psi(n)) * phi(g) / g * ((t_v, d)^3 + (t_v + 1, d)^3) / d^2 with
    g = gcd(a, n) and t_v = [a d / n]; the (t_v + 1) term is dropped when
    a d / n is an integer.
    """
    _require(d >= 1 and n >= 1, f"d and n must be >= 1, got d={d}, n={n}")
    _require(1 <= a <= n, f"need 1 <= a <= n, got a={a}, n={n}")
    g = math.gcd(a, n)
    return Fraction(n * euler_phi(g), orbit_size(n) * g) * _leaf_weight(d, n, a)


def torsion_cylinder_constant(d: int, n: int) -> Constant:
    """Cylinder constant for twists of order n on T^2_d, summed leaf by leaf."""
    total = sum((torsion_leaf_term(d, n, a) for a in range(1, n + 1)), Fraction(0))
    return rational(total, f"torsion cylinder constant, d={d}, n={n}")


def d2_closed_form(n: int) -> Constant:
    """
    The d = 2 torsion constants as case formulas in psi(n):
    9/4 - 1/(4 psi) for odd n, 9/4 - 9/(4 psi) for even n not divisible by 4,
    9/4 - 5/(4 psi) when 4 | n.

    Only the odd case agrees with the leaf sum; see d2_reconciled_form.
    """
    _require(n >= 2, f"n must be >= 2, got {n}")
    if n % 2:
        correction = 1
    elif n % 4:
        correction = 9
    else:
        correction = 5
    return rational(Fraction(9, 4) - Fraction(correction, 4 * dedekind_psi(n)), f"d=2 case formula, n={n}")


def d2_reconciled_form(n: int) -> Constant:
    """
    Closed forms the d = 2 leaf sum reduces to: 9/4 - c/(4 psi(n)) with c = 1
    for odd n, 17 for n = 2 mod 4 and 9 for 4 | n.
    """
    _require(n >= 2, f"n must be >= 2, got {n}")
    if n % 2:
        correction = 1
    elif n % 4:
        correction = 17
    else:
        correction = 9
    return rational(Fraction(9, 4) - Fraction(correction, 4 * dedekind_psi(n)), f"d=2 closed form, n={n}")


def generic_from_fiber(fiber: FiberDecomposition) -> Constant:
    """(1 / area) sum_i area(C_i) sum_k 1/w_{i,k}^2."""
    total = sum((cylinder.area * cylinder.interior_weight for cylinder in fiber.cylinders), Fraction(0))
    return rational(total / fiber.area, f"fiber average, d={fiber.d}")


def finite_orbit_from_fiber(fiber: FiberDecomposition, orbit: OrbitSet) -> Constant:
    """
    Orbit average of sum_k 1/w_k^2: interior points weighted by their cylinder's
    widths, boundary points by the boundary widths.

    Raises:
        DegenerateSurfaceError: If the orbit consists of lattice points.
    """
    if orbit.has_lattice_points:
        raise DegenerateSurfaceError("Orbit of lattice points parametrises degenerate surfaces")
    total = Fraction(0)
    for cylinder, hits in zip(fiber.cylinders, orbit_cylinder_intersections(orbit, fiber.d)):
        total += hits.interior * cylinder.interior_weight + hits.boundary * cylinder.boundary_weight
    logger.debug(f"Orbit of {len(orbit)} points on T^2_{fiber.d}: weight {total}")
    return rational(total / len(orbit), f"orbit average, d={fiber.d}, |O|={len(orbit)}")


class AreaMode(str, Enum):
    GENERIC = "generic"
    ORBIT = "orbit"


def area_restricted_constant(fiber: FiberDecomposition, i: int, a: Fraction, b: Fraction,
                             mode: AreaMode = AreaMode.GENERIC, orbit: Optional[OrbitSet] = None) -> Constant:
    """
    Contribution of the band i + a < t_v < i + b of the fiber cylinder C_i.

    Args:
        fiber (FiberDecomposition): The fiber.
        i (int): Cylinder index.
        a (Fraction): Lower transverse coordinate, 0 <= a.
        b (Fraction): Upper transverse coordinate, a < b <= 1.
        mode (AreaMode): Area average or orbit average.
        orbit (Optional[OrbitSet]): Required in orbit mode.

    Returns:
        Constant: The restricted constant.
    """
    a, b = Fraction(a), Fraction(b)
    _require(0 <= i < fiber.d, f"cylinder index {i} out of range for d={fiber.d}")
    _require(0 <= a < b <= 1, f"need 0 <= a < b <= 1, got ({a}, {b})")
    cylinder = fiber.cylinders[i]
    if mode == AreaMode.GENERIC:
        band_area = cylinder.area * (b - a)
        return rational(band_area * cylinder.interior_weight / fiber.area,
                        f"C_{i} band ({a}, {b}), generic")
    if orbit is None:
        raise DomainError("Orbit mode needs an orbit")
    N = orbit.denominator
    low, high = (i + a) * N, (i + b) * N
    Y = orbit.numerators[:, 1]
    interior = Y % N != 0
    inside = int(((Y > low) & (Y < high) & interior).sum())
    return rational(inside * cylinder.interior_weight / len(orbit), f"C_{i} band ({a}, {b}), orbit")


class TableRow(str, Enum):
    ONE_CYLINDER = "one cylinder"
    D_CYLINDERS = "d cylinders"
    TWO_CLASSES = "two cylinders"
    D_PLUS_ONE = "d + 1 cylinders"


class PrimeTableRow(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    row: TableRow
    cylinders: int = Field(..., description="Horizontal cylinders of a surface in this row")
    leaves: List[int] = Field(default_factory=list, description="Leaf indices a contributing")
    value: Fraction


def prime_table_rows(d: int, n: int) -> List[PrimeTableRow]:
    """
    For prime d, the leaf sum of torsion_cylinder_constant grouped by the
    horizontal cylinder count of the leaf's surfaces. The row values add up
    to the full constant; with gcd(n, d) = 1 the d-cylinder row is d / psi(n).
    """
    _require(len(factorize(d)) == 1 and factorize(d)[0][1] == 1, f"d={d} is not prime")
    rows = {row: [] for row in TableRow}
    for a in range(1, n + 1):
        t_v, remainder = divmod(a * d, n)
        bottom = t_v % d == 0
        top = (t_v + 1) % d == 0
        if remainder == 0:
            row = TableRow.D_CYLINDERS if bottom else TableRow.ONE_CYLINDER
        else:
            row = TableRow.D_PLUS_ONE if bottom or top else TableRow.TWO_CLASSES
        rows[row].append(a)
    cylinders = {TableRow.ONE_CYLINDER: 1, TableRow.D_CYLINDERS: d,
                 TableRow.TWO_CLASSES: 2, TableRow.D_PLUS_ONE: d + 1}
    return [PrimeTableRow(row=row, cylinders=cylinders[row], leaves=leaves,
                          value=sum((torsion_leaf_term(d, n, a) for a in leaves), Fraction(0)))
            for row, leaves in rows.items() if leaves]


if __name__ == '__main__':
    for d in (1, 2, 3, 6):
        print(f"d={d}: generic {generic_cylinder_constant(d).render()}, "
              f"fiber {generic_from_fiber(build_fiber_decomposition(d)).render()}")
    for n in (3, 4, 6):
        orbit = torsion_points(2, n)
        print(f"d=2 n={n}: leaf sum {torsion_cylinder_constant(2, n).render()}, "
              f"orbit {finite_orbit_from_fiber(build_fiber_decomposition(2), orbit).render()}, "
              f"case formula {d2_closed_form(n).render()}")
