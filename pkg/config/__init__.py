"""
Configuration Module for SymCover.

This module provides the pydantic settings models and the config loader.
"""

from .settings import (
    SymCoverConfig, CountingSettings, LoggingConfig, ReportSettings,
    ValidationSettings, load_config, WORKERS_ENV_VAR,
)

__all__ = [
    "SymCoverConfig",
    "CountingSettings",
    "LoggingConfig",
    "ReportSettings",
    "ValidationSettings",
    "load_config",
    "WORKERS_ENV_VAR",
]
