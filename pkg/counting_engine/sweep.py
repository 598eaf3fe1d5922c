"""
Defines the SweepPool that drives every brute-force count in SymCover.

A count is a sum over rows of a planar region (p-rows of the primitive-vector
disc, or z1-rows of the saddle lattice). Rows are cut into fixed slices, a
module-level worker turns a slice into an integer histogram, and the
histograms are added. Integer addition makes the result independent of the
number of workers and of the order in which slices finish.
"""
import logging
import time
from multiprocessing import Pool
from typing import Any, Callable, List, Sequence, Tuple

import numpy as np

from utils.helpers import chunked

logger = logging.getLogger(__name__)

SliceTask = Tuple[Any, np.ndarray]
SliceWorker = Callable[[SliceTask], np.ndarray]

# exact sweeps switch to Python-int (object) arrays once a product may reach this
INT64_SAFE = 2 ** 62


def needs_wide_ints(bound: int) -> bool:
    """Whether integers of magnitude up to `bound` can overflow int64 arithmetic."""
    return bound >= INT64_SAFE


class SweepPool:
    """
    Maps a slice worker over the rows of a sweep and merges by addition.
    """
    def __init__(self, workers: int = 1, rows_per_task: int = 64):
        """
        Args:
            workers (int): Worker processes; 1 runs in-process.
            rows_per_task (int): Rows per slice. The partition depends only on
                this value, never on the worker count.
        """
        if workers < 1:
            raise ValueError(f"workers must be >= 1, got {workers}")
        if rows_per_task < 1:
            raise ValueError(f"rows_per_task must be >= 1, got {rows_per_task}")
        self.workers = workers
        self.rows_per_task = rows_per_task

    def partition(self, rows: Sequence[int]) -> List[np.ndarray]:
        return [np.asarray(block, dtype=np.int64) for block in chunked(np.asarray(rows, dtype=np.int64),
                                                                       self.rows_per_task)]

    def run(self, worker: SliceWorker, payload: Any, rows: Sequence[int]) -> np.ndarray:
        """
        Runs `worker((payload, slice))` over every slice and sums the results.

        Args:
            worker (SliceWorker): Picklable module-level function returning an
                int64 array; all slices must return the same shape.
            payload (Any): Picklable data shared by every slice.
            rows (Sequence[int]): The rows to sweep.

        Returns:
            np.ndarray: The merged int64 histogram.
        """
        tasks = [(payload, block) for block in self.partition(rows)]
        if not tasks:
            raise ValueError("Nothing to sweep")
        start_time = time.time()
        logger.info(f"Sweeping {len(rows)} rows in {len(tasks)} slices on {self.workers} worker(s)")
        if self.workers == 1:
            partials = [worker(task) for task in tasks]
        else:
            with Pool(processes=self.workers) as pool:
                partials = pool.map(worker, tasks)
        total = np.zeros_like(partials[0], dtype=np.int64)
        for partial in partials:
            total += partial
        logger.info(f"Sweep finished in {time.time() - start_time:.2f}s")
        return total


def threshold_histogram(keys: np.ndarray, weights: np.ndarray, thresholds: np.ndarray,
                        strict: bool) -> np.ndarray:
    """
    Weighted counts of keys below each threshold.

    Args:
        keys (np.ndarray): Values compared with the thresholds.
        weights (np.ndarray): int64 weight per key.
        thresholds (np.ndarray): Ascending thresholds.
        strict (bool): Count key < threshold if True, key <= threshold otherwise.

    Returns:
        np.ndarray: int64 array with one cumulative count per threshold.
    """
    side = 'right' if strict else 'left'
    # object arrays of Python ints compare exactly, as int64 arrays do
    first = np.asarray(np.searchsorted(thresholds, keys, side=side), dtype=np.int64)
    hist = np.zeros(len(thresholds) + 1, dtype=np.int64)
    np.add.at(hist, first, weights.astype(np.int64))
    return np.cumsum(hist)[:-1]
