"""
Growth rates for surfaces with a single periodic direction class.
"""
import logging
import math
from typing import Sequence, Tuple

from utils.errors import DomainError, InapplicableFormulaError

logger = logging.getLogger(__name__)

MODULUS_TOLERANCE = 1e-9


def single_cusp_veech_constant(volume: float, cylinders: Sequence[Tuple[float, float]]) -> float:
    """
    Siegel-Veech constant pi / (3 volume) * sum 1/(h_i w_i) of a surface whose
    periodic directions all lie in one SL2 orbit, given the cylinders (w, h) of
    one periodic direction. Only valid when all moduli w/h agree.

    Args:
        volume (float): Covolume of the Veech group, > 0.
        cylinders (Sequence[Tuple[float, float]]): (width, height) pairs.

    Returns:
        float: The constant.

    Raises:
        InapplicableFormulaError: If the cylinders have different moduli.
    """
    if volume <= 0:
        raise DomainError(f"volume must be positive, got {volume}")
    if not cylinders:
        raise DomainError("At least one cylinder is needed")
    if any(w <= 0 or h <= 0 for w, h in cylinders):
        raise DomainError(f"Cylinder dimensions must be positive: {list(cylinders)}")
    moduli = [w / h for w, h in cylinders]
    if not all(math.isclose(m, moduli[0], rel_tol=MODULUS_TOLERANCE) for m in moduli):
        raise InapplicableFormulaError(f"Cylinder moduli differ: {moduli}")
    return math.pi / (3 * volume) * sum(1.0 / (h * w) for w, h in cylinders)


def gutkin_judge_rate(volume: float, l_v: float, w: float) -> float:
    """
    Quadratic growth coefficient l_v / (volume w^2) of one orbit of saddle
    connection holonomies, for a cusp of width w and a vector of length
    ratio l_v.
    """
    if volume <= 0 or w <= 0 or l_v <= 0:
        raise DomainError(f"volume, l_v and w must be positive, got {volume}, {l_v}, {w}")
    return l_v / (volume * w * w)
