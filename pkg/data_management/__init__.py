"""
Data Management Module for SymCover.

Report schemas, JSON and CSV output, and reading reports back.
"""

from .schemas import (
    BaseSchema, ConstantRecord, CountRow, CountTable, ReportDocument, TOOL_VERSION,
    constant_record, count_table, report_json_schema,
)
from .report_writer import ReportWriter, load_report, load_count_table

__all__ = [
    # Schemas
    "BaseSchema",
    "ConstantRecord",
    "CountRow",
    "CountTable",
    "ReportDocument",
    "TOOL_VERSION",
    "constant_record",
    "count_table",
    "report_json_schema",
    # Output
    "ReportWriter",
    "load_report",
    "load_count_table",
]
