"""
Configuration settings for SymCover.
Uses Pydantic for data validation and management.
"""
import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

from utils.helpers import deep_update

logger = logging.getLogger(__name__)

WORKERS_ENV_VAR = "WORKERS"


class CountingSettings(BaseModel):
    workers: int = Field(default=1, ge=1, description="Number of worker processes for direction sweeps.")
    rows_per_task: int = Field(default=64, ge=1, description="Rows of the sweep disc handed to a worker at once.")
    float_epsilon: float = Field(default=1e-9, gt=0, description="Tolerance for integer tests on floating-point twists.")


class LoggingConfig(BaseModel):
    level: str = Field(default="WARNING", description="Logging level (e.g., DEBUG, INFO, WARNING, ERROR).")
    log_file: Optional[str] = Field(default=None, description="Path to the log file. If None, logs to the console.")


class ReportSettings(BaseModel):
    output_dir: str = Field(default="./output_data", description="Base directory that relative CSV/JSON report paths resolve against.")
    decimal_digits: int = Field(default=15, ge=1, le=17, description="Significant digits used when printing decimals.")


class ValidationSettings(BaseModel):
    seed: int = Field(default=20240601, description="Seed for randomized checks.")


class SymCoverConfig(BaseModel):
    """
    Main configuration model for SymCover.
    """
    model_config = ConfigDict(validate_assignment=True)

    counting: CountingSettings = Field(default_factory=CountingSettings)
    logging_config: LoggingConfig = Field(default_factory=LoggingConfig)
    reports: ReportSettings = Field(default_factory=ReportSettings)
    validation: ValidationSettings = Field(default_factory=ValidationSettings)


def _environment_overrides() -> Dict[str, Any]:
    load_dotenv()
    raw = os.environ.get(WORKERS_ENV_VAR)
    if raw is None or raw.strip() == "":
        return {}
    try:
        workers = int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {WORKERS_ENV_VAR}={raw!r}")
        return {}
    logger.info(f"Using {WORKERS_ENV_VAR}={workers} from the environment")
    return {"counting": {"workers": workers}}


def load_config(config_file_path: Optional[Union[str, Path]] = None,
                overrides: Optional[Dict[str, Any]] = None) -> SymCoverConfig:
    """
    Loads the SymCover configuration.

    Defaults are merged with, in order, a JSON config file, the optional
    WORKERS environment variable (a .env file is honoured) and explicit
    overrides.

    Args:
        config_file_path (Optional[Union[str, Path]]): Path to a JSON configuration file.
        overrides (Optional[Dict[str, Any]]): Nested values that win over everything else.

    Returns:
        SymCoverConfig: The loaded configuration.
    """
    settings: Dict[str, Any] = SymCoverConfig().model_dump()
    if config_file_path:
        logger.info(f"Loading configuration from {config_file_path}...")
        try:
            with open(config_file_path, "r", encoding="utf-8") as handle:
                deep_update(settings, json.load(handle))
        except OSError as e:
            logger.error(f"Configuration file could not be read: {config_file_path}: {e}")
            raise
    else:
        logger.debug("No configuration file provided. Using default configuration.")
    deep_update(settings, _environment_overrides())
    if overrides:
        deep_update(settings, overrides)
    return SymCoverConfig(**settings)
