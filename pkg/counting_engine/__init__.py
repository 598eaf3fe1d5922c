"""
Counting Engine Module for SymCover.

Brute-force counts of cylinders and saddle connections on d-symmetric
covers, run as deterministic sweeps over a worker pool, and growth reports
comparing them with the closed-form constants.
"""

from .sweep import SweepPool, threshold_histogram
from .cylinder_counter import count_cylinders, count_cylinders_many
from .saddle_counter import count_saddles, count_saddles_many, saddle_class_counts
from .growth_report import (
    CountKind, GrowthRow, GrowthReport, REPORT_COLUMNS, growth_report, predicted_constant, describe_surface,
)

__all__ = [
    "SweepPool",
    "threshold_histogram",
    "count_cylinders",
    "count_cylinders_many",
    "count_saddles",
    "count_saddles_many",
    "saddle_class_counts",
    "CountKind",
    "GrowthRow",
    "GrowthReport",
    "REPORT_COLUMNS",
    "growth_report",
    "predicted_constant",
    "describe_surface",
]
