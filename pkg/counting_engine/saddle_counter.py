"""
Brute-force saddle-connection counts.

Base holonomies v = tau + z with |v| <= T are swept row by row in z1. A
connection is kept when its open segment avoids the marked points, which for
a twist of base order N means gcd(N v) < N; floating twists are taken to be
in general position. Every kept holonomy stands for 2d connections on the
cover: d lifts, each in both orientations. Counts are kept per class
m = gcd(h - z1, v - z2, d).

Rational twists are counted in integers throughout; when N T is too large
for int64 the slice falls back to Python ints.
"""
import logging
import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import numpy as np

from counting_engine.sweep import SweepPool, needs_wide_ints, threshold_histogram
from number_theory.arithmetic_functions import divisors
from symmetric_surfaces.surface_model import DSurface
from utils.errors import DivisibilityError, DomainError

logger = logging.getLogger(__name__)

ORIENTATIONS = 2


def _row_offsets(x: float, y0: float, T: float) -> np.ndarray:
    """z2 values with (x)^2 + (y0 + z2)^2 <= T^2, widened by one on each side."""
    room = T * T - x * x
    if room < 0:
        return np.zeros(0, dtype=np.int64)
    reach = math.sqrt(room)
    return np.arange(math.floor(-reach - y0) - 1, math.ceil(reach - y0) + 2, dtype=np.int64)


def _exact_thresholds(T_list: Sequence[float], N: int) -> tuple:
    """floor(N^2 T^2) as Python ints: W1^2 + W2^2 <= N^2 T^2 iff it is <= the floor."""
    return tuple(math.floor(Fraction(T * T) * N * N) for T in T_list)


def _exact_keys(Z1: np.ndarray, Z2: np.ndarray, tau_x: int, tau_y: int, N: int, wide: bool):
    """Squared lengths N^2 |v|^2 and the visibility mask, exactly."""
    if wide:
        W1, W2 = tau_x + N * Z1.astype(object), tau_y + N * Z2.astype(object)
        keep = np.fromiter((math.gcd(a, b) < N for a, b in zip(W1, W2)), dtype=bool, count=W1.size)
    else:
        W1, W2 = tau_x + N * Z1, tau_y + N * Z2
        keep = np.gcd(W1, W2) < N
    return W1 * W1 + W2 * W2, keep


def _saddle_slice(task) -> np.ndarray:
    """Per-class saddle counts for one slice of z1-rows: shape (d + 1, len(T_list))."""
    payload, rows = task
    mode, d, h, v, tau_x, tau_y, N, T_list, exact_thresholds = payload
    T_max = max(T_list)
    result = np.zeros((d + 1, len(T_list)), dtype=np.int64)
    z1_parts, z2_parts = [], []
    for z1 in rows:
        z1 = int(z1)
        z2 = _row_offsets(tau_x / N + z1, tau_y / N, T_max)
        if z2.size:
            z1_parts.append(np.full(z2.size, z1, dtype=np.int64))
            z2_parts.append(z2)
    if not z1_parts:
        return result
    Z1, Z2 = np.concatenate(z1_parts), np.concatenate(z2_parts)
    if mode == 'exact':
        wide = needs_wide_ints(2 * (N * (math.ceil(T_max) + 3)) ** 2)
        keys, keep = _exact_keys(Z1, Z2, tau_x, tau_y, N, wide)
        thresholds = np.array(exact_thresholds, dtype=object if wide else np.int64)
    else:
        X, Y = tau_x + Z1, tau_y + Z2
        keys = X * X + Y * Y
        thresholds = np.square(np.asarray(T_list, dtype=np.float64))
        keep = np.ones(keys.shape, dtype=bool)
    classes = np.gcd(np.gcd(h - Z1, v - Z2), d)
    for m in divisors(d):
        selected = keep & (classes == m)
        if selected.any():
            result[m] = threshold_histogram(keys[selected], np.ones(int(selected.sum()), dtype=np.int64),
                                            thresholds, strict=False)
    return result


def _payload(surface: DSurface, T_list: Sequence[float]) -> tuple:
    tau_x, tau_y = surface.slit
    if surface.exact:
        N = surface.twist.base_order
        return ('exact', surface.d, surface.h, surface.v, int(tau_x * N), int(tau_y * N), N, tuple(T_list),
                _exact_thresholds(T_list, N))
    return ('float', surface.d, surface.h, surface.v, float(tau_x), float(tau_y), 1, tuple(T_list), None)


def saddle_class_counts(surface: DSurface, T_list: Sequence[float], workers: int = 1,
                        rows_per_task: int = 64) -> Dict[int, List[int]]:
    """
    Saddle connections with |v| <= T on the cover, split by class m | d.

    Args:
        surface (DSurface): A non-degenerate surface.
        T_list (Sequence[float]): Ascending positive bounds.
        workers (int): Worker processes.
        rows_per_task (int): Sweep slice size.

    Returns:
        Dict[int, List[int]]: For each m | d, one count per T, in the
        oriented convention (2d connections per base holonomy).
    """
    surface.require_non_degenerate()
    T_list = [float(T) for T in T_list]
    if not T_list or T_list[0] <= 0 or any(a >= b for a, b in zip(T_list, T_list[1:])):
        raise DomainError(f"T values must be positive and ascending, got {T_list}")
    reach = int(math.ceil(T_list[-1])) + 1
    rows = np.arange(-reach, reach + 1, dtype=np.int64)
    counts = SweepPool(workers, rows_per_task).run(_saddle_slice, _payload(surface, T_list), rows)
    factor = ORIENTATIONS * surface.d
    result = {m: [int(c) * factor for c in counts[m]] for m in divisors(surface.d)}
    logger.info(f"Saddle counts by class for d={surface.d}, twist {surface.twist}: {result}")
    return result


def count_saddles_many(surface: DSurface, T_list: Sequence[float], m_filter: Optional[int] = None,
                       workers: int = 1, rows_per_task: int = 64) -> List[int]:
    """
    N(T) for saddle connections, all of them or the class-m family only.

    Raises:
        DivisibilityError: If m_filter does not divide d.
    """
    if m_filter is not None and (m_filter < 1 or surface.d % m_filter):
        raise DivisibilityError(f"m={m_filter} does not divide d={surface.d}")
    by_class = saddle_class_counts(surface, T_list, workers, rows_per_task)
    if m_filter is not None:
        return by_class[m_filter]
    return [sum(column) for column in zip(*by_class.values())]


def count_saddles(surface: DSurface, T: float, m_filter: Optional[int] = None,
                  workers: int = 1, rows_per_task: int = 64) -> int:
    return count_saddles_many(surface, [T], m_filter, workers, rows_per_task)[0]
