"""
Saddle-connection constants: all connections between the two cone points,
and the m-homologous families that collapse onto lattice points of class m.
"""
import logging
import math
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List

from pydantic import BaseModel, ConfigDict, Field

from modular_fiber.spine import spine_point_at, spine_points
from modular_group.orbits import torsion_points
from number_theory.arithmetic_functions import coprime_inverse_square_sum, inverse_square_sum, jordan_totient2, orbit_size
from siegel_veech.constants import Constant, Transcendental, rational
from utils.errors import DivisibilityError, DomainError, InapplicableFormulaError

logger = logging.getLogger(__name__)


class SumConvention(str, Enum):
    """Range of the coprime inverse-square sum in the torsion saddle constant."""
    ALL_COPRIME = "all"
    BELOW_N = "below-n"


def _require_divisor(d: int, m: int) -> None:
    if d < 1 or m < 1 or d % m:
        raise DivisibilityError(f"m={m} does not divide d={d}")


def generic_saddle_constant() -> Constant:
    """pi^2 / 3 for a generic twist on the torus."""
    return Constant(coefficient=Fraction(1, 3), transcendental=Transcendental.PI_SQUARED,
                    description="generic saddle constant")


def generic_cover_saddle_constant(d: int) -> Constant:
    """d pi^2 / 3: each base connection has d lifts."""
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    return Constant(coefficient=Fraction(d, 3), transcendental=Transcendental.PI_SQUARED,
                    description=f"generic saddle constant, d={d}")


def saddle_torsion_constant(n: int, convention: SumConvention = SumConvention.ALL_COPRIME) -> Constant:
    """
    Saddle constant for a marked point of order n on the torus,
    2 n^2 / (phi(n) psi(n)) times a sum of 1/i^2 over i coprime to n.

    ALL_COPRIME sums over every such i and collapses to exactly 2 zeta(2).
    BELOW_N stops at i < n, which is what the visibility rule of the counter
    produces, and is rational.
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    prefactor = Fraction(2 * n * n, orbit_size(n))
    if convention == SumConvention.ALL_COPRIME:
        coefficient = prefactor * Fraction(jordan_totient2(n), n * n)
        return Constant(coefficient=coefficient, transcendental=Transcendental.ZETA2,
                        description=f"torsion saddle constant, n={n}")
    return rational(prefactor * coprime_inverse_square_sum(n, n - 1),
                    f"torsion saddle constant, n={n}, i < n")


def cover_saddle_constant(d: int, n: int, convention: SumConvention = SumConvention.ALL_COPRIME) -> Constant:
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    constant = saddle_torsion_constant(n, convention) * d
    return constant.model_copy(update={'description': f"{constant.description}, d={d}"})


def m_homologous_generic(d: int, m: int, per_chain: bool = True) -> Constant:
    """
    Generic constant of the m-homologous family.

    Per chain it is (pi^2/3) phi(d/m) psi(d/m) / (d m); counting all d
    connections of the family multiplies by m, and the classes then add up to
    d pi^2 / 3.

    Raises:
        DivisibilityError: If m does not divide d.
    """
    _require_divisor(d, m)
    coefficient = Fraction(jordan_totient2(d // m), 3 * d)
    if per_chain:
        coefficient /= m
    return Constant(coefficient=coefficient, transcendental=Transcendental.PI_SQUARED,
                    description=f"m-homologous constant, d={d}, m={m}" + (", per chain" if per_chain else ""))


def m_homologous_finite(d: int, n: int, m: int) -> Constant:
    """
    Per-chain constant of the class-m family for twists of order n:
    2d / (m |O|) times the sum of 1/{t_h}^2 over orbit points on spine
    segments whose left endpoint has class m.

    Raises:
        DivisibilityError: If m does not divide d.
    """
    _require_divisor(d, m)
    orbit = torsion_points(d, n)
    distances = [point.left_distance for point in spine_points(orbit, m) if point.segment.start_class == m]
    total = sum((1 / (s * s) for s in distances), Fraction(0))
    return rational(Fraction(2 * d, m * len(orbit)) * total, f"m-homologous constant, d={d}, n={n}, m={m}")


def m_homologous_endpoint(d: int, n: int, m: int, point, epsilon: int) -> Constant:
    """
    Contribution of one spine point: d / (m |O| |{t_h} - epsilon|^2), where
    epsilon = 0 measures to the left endpoint and epsilon = 1 to the right
    one, which must have class m.

    Args:
        point: (t_h, t_v) of an order-n twist on the spine of T^2_d.
        epsilon (int): 0 or 1.
    """
    _require_divisor(d, m)
    if epsilon not in (0, 1):
        raise DomainError(f"epsilon must be 0 or 1, got {epsilon}")
    located = spine_point_at(point[0], point[1], d)
    endpoint_class = located.segment.end_class if epsilon else located.segment.start_class
    if endpoint_class != m:
        raise DomainError(f"Endpoint {epsilon} of the segment through {point} has class {endpoint_class}, not {m}")
    distance = located.right_distance if epsilon else located.left_distance
    return rational(Fraction(d, m * orbit_size(n)) / (distance * distance),
                    f"endpoint term, d={d}, n={n}, m={m}, epsilon={epsilon}")


class SpinePart(str, Enum):
    LATTICE = "s0"
    SHIFTED = "s1"
    BOTH = "both"


class ConvergenceRow(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    branch: str = Field(..., description="'odd', 'even, 4 does not divide n' or '4 divides n'")
    constant: Constant
    limit_gap: float = Field(..., description="|value - 3 zeta(2)|")


def d2_limit() -> Constant:
    return Constant(coefficient=3, transcendental=Transcendental.ZETA2, description="d=2 limit")


def _branch(n: int) -> str:
    if n % 2:
        return "odd"
    return "4 divides n" if n % 4 == 0 else "even, 4 does not divide n"


def d2_spine_parts(n: int) -> Dict[SpinePart, Fraction]:
    """Exact contributions of the lattice spine s0 and the shifted spine s1 for order n."""
    if n < 3:
        raise DomainError(f"n must be >= 3, got {n}")
    prefactor = Fraction(4 * n * n, orbit_size(n))
    if n % 2:
        odd = coprime_inverse_square_sum(2 * n, (n + 1) // 2)
        return {SpinePart.LATTICE: prefactor * odd, SpinePart.SHIFTED: Fraction(0)}
    half = n // 2
    shifted = coprime_inverse_square_sum(half, half) / 2
    lattice = inverse_square_sum(half - i for i in range(1, half) if math.gcd(i, n) == 1) / 4
    return {SpinePart.LATTICE: prefactor * lattice, SpinePart.SHIFTED: prefactor * shifted}


def d2_convergence_sequence(n_values: Iterable[int], part: SpinePart = SpinePart.BOTH, d: int = 2) -> List[ConvergenceRow]:
    """
    The class-1 saddle constants of d = 2 covers along n, tending to 3 zeta(2).

    Raises:
        InapplicableFormulaError: For d != 2.
    """
    if d != 2:
        raise InapplicableFormulaError(f"The convergence sequence is defined for d=2 only, got d={d}")
    limit = d2_limit().value
    rows = []
    for n in n_values:
        parts = d2_spine_parts(n)
        if part == SpinePart.BOTH:
            value = parts[SpinePart.LATTICE] + parts[SpinePart.SHIFTED]
        else:
            value = parts[part]
        constant = rational(value, f"d=2 class-1 saddle constant, n={n}, {part.value}")
        rows.append(ConvergenceRow(n=n, branch=_branch(n), constant=constant,
                                   limit_gap=abs(constant.value - limit)))
    return rows
