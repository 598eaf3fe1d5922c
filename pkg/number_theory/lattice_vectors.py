"""
Primitive integer vectors in a disc.

The sweep domain for every direction count: all (p, q) with gcd(|p|, |q|) = 1
and p^2 + q^2 <= T^2, both orientations, in row-major order (p ascending,
then q ascending). Rows are the unit of work handed to counting workers.
"""
import logging
import math
from typing import Iterator, Sequence, Tuple

import numpy as np

from utils.errors import DomainError

logger = logging.getLogger(__name__)


def _row_half_width(p: int, radius_sq: float) -> int:
    """Largest q >= 0 with p^2 + q^2 <= radius_sq, or -1 when the row is empty."""
    room = radius_sq - p * p
    if room < 0:
        return -1
    return math.isqrt(int(math.floor(room)))


def sweep_rows(T: float) -> np.ndarray:
    """All p values -floor(T) .. floor(T) of the disc of radius T."""
    bound = int(math.floor(T))
    return np.arange(-bound, bound + 1, dtype=np.int64)


def primitive_vectors(T: float) -> Iterator[Tuple[int, int]]:
    """
    Yields every primitive (p, q) with p^2 + q^2 <= T^2.

    Args:
        T (float): Radius, T > 0.

    Yields:
        Tuple[int, int]: Primitive vectors; (p, q) and (-p, -q) both appear.

    Raises:
        DomainError: If T <= 0.
    """
    if T <= 0:
        raise DomainError(f"T must be positive, got {T}")
    radius_sq = float(T) * float(T)
    for p in sweep_rows(T):
        p = int(p)
        half = _row_half_width(p, radius_sq)
        for q in range(-half, half + 1):
            if math.gcd(p, q) == 1:
                yield p, q


def primitive_vector_block(rows: Sequence[int], T: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    Vectorized primitive vectors of the disc restricted to the given p rows.

    Args:
        rows (Sequence[int]): p values to include.
        T (float): Radius of the disc.

    Returns:
        Tuple[np.ndarray, np.ndarray]: int64 arrays (P, Q) in row-major order.
    """
    radius_sq = float(T) * float(T)
    ps, qs = [], []
    for p in rows:
        p = int(p)
        half = _row_half_width(p, radius_sq)
        if half < 0:
            continue
        q = np.arange(-half, half + 1, dtype=np.int64)
        q = q[np.gcd(q, p) == 1]
        if q.size == 0:
            continue
        ps.append(np.full(q.size, p, dtype=np.int64))
        qs.append(q)
    if not ps:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty.copy()
    return np.concatenate(ps), np.concatenate(qs)


def count_primitive_vectors(T: float) -> int:
    if T <= 0:
        raise DomainError(f"T must be positive, got {T}")
    P, _ = primitive_vector_block(sweep_rows(T), T)
    return int(P.size)
