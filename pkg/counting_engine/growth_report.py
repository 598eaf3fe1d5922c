"""
Growth reports: brute-force counts N(T) next to the predicted (pi/zeta(2)) c T^2.
"""
import logging
from enum import Enum
from typing import List, Optional, Sequence

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from counting_engine.cylinder_counter import count_cylinders_many
from counting_engine.saddle_counter import count_saddles_many
from modular_fiber.fiber_decomposition import build_fiber_decomposition
from modular_group.orbits import orbit_enumerate
from siegel_veech.constants import Constant
from siegel_veech.cylinder_constants import finite_orbit_from_fiber, generic_cylinder_constant
from siegel_veech.saddle_constants import (
    SumConvention, cover_saddle_constant, generic_cover_saddle_constant, m_homologous_finite, m_homologous_generic,
)
from symmetric_surfaces.surface_model import DSurface
from utils.errors import DomainError
from utils.helpers import is_ascending

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ["T", "N", "N_over_T2", "predicted", "rel_error"]


class CountKind(str, Enum):
    CYLINDERS = "cylinders"
    SADDLES_ALL = "saddles-all"
    SADDLES_M_CLASS = "saddles-m-class"


class GrowthRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    T: float
    N: int
    N_over_T2: float
    predicted: float = Field(..., description="(pi / zeta(2)) c")
    rel_error: float = Field(..., description="|N/T^2 - predicted| / predicted")


class GrowthReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    surface: str = Field(..., description="d and twist of the counted surface")
    kind: CountKind
    m: Optional[int] = None
    constant: Constant
    rows: List[GrowthRow]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([row.model_dump() for row in self.rows], columns=REPORT_COLUMNS)

    @property
    def final_error(self) -> float:
        return self.rows[-1].rel_error


def describe_surface(surface: DSurface) -> str:
    return f"d={surface.d}, twist=({surface.twist.t_h}, {surface.twist.t_v})"


def predicted_constant(surface: DSurface, kind: CountKind, m: Optional[int] = None) -> Constant:
    """
    The constant a count on this surface should approach: orbit averages for
    rational twists, fiber averages for floating twists.
    """
    d = surface.d
    if kind == CountKind.CYLINDERS:
        if surface.exact:
            orbit = orbit_enumerate(surface.twist.as_torus_point())
            return finite_orbit_from_fiber(build_fiber_decomposition(d), orbit)
        return generic_cylinder_constant(d)
    if kind == CountKind.SADDLES_ALL:
        if surface.exact:
            return cover_saddle_constant(d, surface.twist.base_order, SumConvention.BELOW_N)
        return generic_cover_saddle_constant(d)
    if m is None:
        raise DomainError("A class-m report needs m")
    if surface.exact:
        # one chain per class carries d/m connections; the count sees all m chains
        return m_homologous_finite(d, surface.twist.order, m) * m
    return m_homologous_generic(d, m, per_chain=False)


def growth_report(surface: DSurface, T_list: Sequence[float], kind: CountKind, m: Optional[int] = None,
                  workers: int = 1, rows_per_task: int = 64) -> GrowthReport:
    """
    Counts at every T and the prediction they should approach.

    Args:
        surface (DSurface): A non-degenerate surface.
        T_list (Sequence[float]): Ascending bounds.
        kind (CountKind): What to count.
        m (Optional[int]): Class for SADDLES_M_CLASS.
        workers (int): Worker processes for the sweep.
        rows_per_task (int): Sweep slice size.

    Returns:
        GrowthReport: One row per T.
    """
    T_list = [float(T) for T in T_list]
    if not is_ascending(T_list):
        raise DomainError(f"T values must be ascending, got {T_list}")
    constant = predicted_constant(surface, kind, m)
    if kind == CountKind.CYLINDERS:
        counts = count_cylinders_many(surface, T_list, workers, rows_per_task)
    else:
        m_filter = m if kind == CountKind.SADDLES_M_CLASS else None
        counts = count_saddles_many(surface, T_list, m_filter, workers, rows_per_task)
    predicted = constant.growth_rate
    rows = []
    for T, N in zip(T_list, counts):
        ratio = N / (T * T)
        rows.append(GrowthRow(T=T, N=N, N_over_T2=ratio, predicted=predicted,
                              rel_error=abs(ratio - predicted) / predicted if predicted > 0 else float('inf')))
    logger.info(f"{kind.value} report for {describe_surface(surface)}: final rel. error {rows[-1].rel_error:.4f}")
    return GrowthReport(surface=describe_surface(surface), kind=kind, m=m, constant=constant, rows=rows)
