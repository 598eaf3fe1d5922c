"""
Utilities Module for SymCover.

This module provides helper functions, logging setup and the exception hierarchy.
"""

from .logger_config import setup_logging
from .helpers import deep_update, parse_number_list, is_ascending, format_fraction, fingerprint, chunked
from .errors import (
    SymCoverError, DomainError, NotUnimodularError, NonPrimitiveDirectionError,
    InfiniteOrbitError, DegenerateSurfaceError, NonDegenerateSurfaceError,
    ConePointHitError, DivisibilityError, InapplicableFormulaError, TwistParseError,
)

__all__ = [
    "setup_logging",
    "deep_update",
    "parse_number_list",
    "is_ascending",
    "format_fraction",
    "fingerprint",
    "chunked",
    "SymCoverError",
    "DomainError",
    "NotUnimodularError",
    "NonPrimitiveDirectionError",
    "InfiniteOrbitError",
    "DegenerateSurfaceError",
    "NonDegenerateSurfaceError",
    "ConePointHitError",
    "DivisibilityError",
    "InapplicableFormulaError",
    "TwistParseError",
]
