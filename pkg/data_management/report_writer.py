"""
Writing and reading SymCover reports: JSON documents and CSV count tables.
"""
import json
import logging
from pathlib import Path
from typing import Optional, Union

import pandas as pd

from counting_engine.growth_report import REPORT_COLUMNS, GrowthReport
from .schemas import ReportDocument, report_json_schema

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class ReportWriter:
    """
    Writes reports below an output directory; absolute paths are used as given.
    """
    def __init__(self, output_dir: Optional[PathLike] = None):
        """
        Args:
            output_dir (Optional[PathLike]): Base directory for relative paths.
        """
        self.output_dir = Path(output_dir) if output_dir else None

    def _resolve(self, path: PathLike) -> Path:
        path = Path(path)
        if self.output_dir and not path.is_absolute():
            path = self.output_dir / path
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            logger.error(f"Cannot create directory {path.parent}: {e}")
            raise
        return path

    def write_json(self, document: ReportDocument, path: PathLike) -> Path:
        target = self._resolve(path)
        try:
            target.write_text(document.model_dump_json(indent=2), encoding="utf-8")
        except OSError as e:
            logger.error(f"Error writing report to {target}: {e}")
            raise
        logger.info(f"Report written to {target}")
        return target

    def write_csv(self, report: GrowthReport, path: PathLike) -> Path:
        """CSV with exactly the columns T, N, N_over_T2, predicted, rel_error."""
        target = self._resolve(path)
        frame = report.to_frame()[REPORT_COLUMNS]
        try:
            frame.to_csv(target, index=False, float_format="%.15g")
        except OSError as e:
            logger.error(f"Error writing count table to {target}: {e}")
            raise
        logger.info(f"Count table written to {target}")
        return target

    def write_schema(self, path: PathLike) -> Path:
        target = self._resolve(path)
        try:
            target.write_text(json.dumps(report_json_schema(), indent=2) + "\n", encoding="utf-8")
        except OSError as e:
            logger.error(f"Error writing schema to {target}: {e}")
            raise
        logger.info(f"Report schema written to {target}")
        return target


def load_report(path: PathLike) -> ReportDocument:
    """Reads a JSON report back, validating it against ReportDocument."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        logger.error(f"Report file could not be read: {path}: {e}")
        raise
    return ReportDocument.model_validate_json(text)


def load_count_table(path: PathLike) -> pd.DataFrame:
    frame = pd.read_csv(path)
    missing = [column for column in REPORT_COLUMNS if column not in frame.columns]
    if missing:
        raise ValueError(f"Count table {path} lacks columns {missing}")
    return frame
