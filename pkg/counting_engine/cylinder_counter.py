"""
Brute-force cylinder counts N(T): cylinders of width < T over all directions.

Each primitive direction u = (p, q) is handled by the closed-form
decomposition: with t_v' = p t_v - q t_h (mod d) and i = [t_v'], there are
gcd(i, d) cylinders of width (d / gcd(i, d)) |u| and, unless t_v' is an
integer, gcd(i+1, d) of width (d / gcd(i+1, d)) |u|.
"""
import logging
import math
from typing import List, Sequence

import numpy as np

from counting_engine.sweep import SweepPool, needs_wide_ints, threshold_histogram
from number_theory.lattice_vectors import primitive_vector_block, sweep_rows
from symmetric_surfaces.surface_model import DSurface
from utils.errors import DomainError

logger = logging.getLogger(__name__)


def _exact_payload(surface: DSurface, T_list: Sequence[float]) -> tuple:
    t_h, t_v = surface.twist.t_h, surface.twist.t_v
    M = math.lcm(t_h.denominator, t_v.denominator)
    return ('exact', surface.d, int(t_h * M), int(t_v * M), M, tuple(T_list), 0.0)


def _float_payload(surface: DSurface, T_list: Sequence[float]) -> tuple:
    return ('float', surface.d, float(surface.twist.t_h), float(surface.twist.t_v), 1,
            tuple(T_list), surface.epsilon)


def _split_exact(P: np.ndarray, Q: np.ndarray, d: int, A: int, B: int, M: int):
    """(i, twist on boundary) from X = M t_v' = p B - q A mod d M, exactly."""
    reach = int(np.abs(P).max()) + int(np.abs(Q).max()) + 1
    if needs_wide_ints(reach * d * M):
        X = (P.astype(object) * B - Q.astype(object) * A) % (d * M)
        return (X // M).astype(np.int64), (X % M == 0).astype(bool)
    X = (P * B - Q * A) % (d * M)
    return X // M, X % M == 0


def _split_float(P: np.ndarray, Q: np.ndarray, d: int, t_h: float, t_v: float, epsilon: float):
    value = np.mod(P * t_v - Q * t_h, d)
    i = np.floor(value)
    frac = value - i
    i = i.astype(np.int64)
    top = frac > 1.0 - epsilon
    i = np.where(top, i + 1, i) % d
    return i, (frac < epsilon) | top


def _cylinder_slice(task) -> np.ndarray:
    """Cylinder counts for one slice of p-rows, one entry per T."""
    payload, rows = task
    mode, d, a, b, M, T_list, epsilon = payload
    thresholds = np.square(np.asarray(T_list, dtype=np.float64))
    P, Q = primitive_vector_block(rows, max(T_list))
    if P.size == 0:
        return np.zeros(len(T_list), dtype=np.int64)
    if mode == 'exact':
        i, on_boundary = _split_exact(P, Q, d, a, b, M)
    else:
        i, on_boundary = _split_float(P, Q, d, a, b, epsilon)
    norm = P * P + Q * Q
    lower = np.gcd(i, d)
    keys = [(d // lower) ** 2 * norm]
    weights = [lower]
    upper = np.gcd((i[~on_boundary] + 1) % d, d)
    keys.append((d // upper) ** 2 * norm[~on_boundary])
    weights.append(upper)
    return threshold_histogram(np.concatenate(keys), np.concatenate(weights), thresholds, strict=True)


def count_cylinders_many(surface: DSurface, T_list: Sequence[float], workers: int = 1,
                         rows_per_task: int = 64) -> List[int]:
    """
    N(T) for every T in an ascending list, from a single sweep.

    Args:
        surface (DSurface): A non-degenerate surface.
        T_list (Sequence[float]): Ascending positive bounds.
        workers (int): Worker processes.
        rows_per_task (int): Sweep slice size.

    Returns:
        List[int]: Cylinder counts, one per T.
    """
    surface.require_non_degenerate()
    T_list = [float(T) for T in T_list]
    if not T_list or T_list[0] <= 0 or any(a >= b for a, b in zip(T_list, T_list[1:])):
        raise DomainError(f"T values must be positive and ascending, got {T_list}")
    payload = _exact_payload(surface, T_list) if surface.exact else _float_payload(surface, T_list)
    counts = SweepPool(workers, rows_per_task).run(_cylinder_slice, payload, sweep_rows(T_list[-1]))
    logger.info(f"Cylinder counts for d={surface.d}, twist {surface.twist}: {counts.tolist()}")
    return [int(c) for c in counts]


def count_cylinders(surface: DSurface, T: float, workers: int = 1, rows_per_task: int = 64) -> int:
    """Number of cylinders of width < T, summed over all primitive directions."""
    return count_cylinders_many(surface, [T], workers, rows_per_task)[0]
