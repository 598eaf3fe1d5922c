"""
Pydantic schemas for the machine-readable reports written by SymCover.
"""
import logging
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from counting_engine.growth_report import REPORT_COLUMNS, GrowthReport
from siegel_veech.constants import Constant
from utils.helpers import format_fraction

logger = logging.getLogger(__name__)

TOOL_VERSION = "0.1.0"


class BaseSchema(BaseModel):
    model_config = ConfigDict(str_strip_whitespace=True, validate_assignment=True)


class ConstantRecord(BaseSchema):
    name: str = Field(..., description="What the constant is, e.g. 'torsion'")
    coefficient: str = Field(..., description="Exact rational coefficient as 'p/q'")
    tag: str = Field(..., description="Transcendental factor: '1', 'pi^2' or 'zeta(2)'")
    decimal: float = Field(..., description="coefficient * tag as a float")
    description: str = Field(default="")
    parameters: Dict[str, Any] = Field(default_factory=dict)

    @field_validator('coefficient')
    @classmethod
    def check_rational(cls, value: str) -> str:
        numerator, _, denominator = value.partition("/")
        int(numerator)
        if denominator and int(denominator) <= 0:
            raise ValueError(f"Denominator must be positive in {value!r}")
        return value


class CountRow(BaseSchema):
    T: float = Field(..., gt=0)
    N: int = Field(..., ge=0)
    N_over_T2: float
    predicted: float
    rel_error: float


class CountTable(BaseSchema):
    kind: str = Field(..., description="cylinders, saddles-all or saddles-m-class")
    m: Optional[int] = Field(default=None, ge=1)
    surface: str
    predicted_constant: ConstantRecord
    rows: List[CountRow]

    @field_validator('rows')
    @classmethod
    def check_monotone(cls, rows: List[CountRow]) -> List[CountRow]:
        for earlier, later in zip(rows, rows[1:]):
            if later.T <= earlier.T or later.N < earlier.N:
                raise ValueError("Count rows must have ascending T and nondecreasing N")
        return rows


class ReportDocument(BaseSchema):
    command: str = Field(..., description="The command line that produced the report")
    parameters: Dict[str, Any] = Field(default_factory=dict, description="Parsed input parameters")
    results: List[ConstantRecord] = Field(default_factory=list)
    counts: List[CountTable] = Field(default_factory=list)
    rows: List[Dict[str, Any]] = Field(default_factory=list, description="Free-form tabular output, e.g. decompositions")
    tool_version: str = Field(default=TOOL_VERSION)
    elapsed_seconds: float = Field(default=0.0, ge=0)
    fingerprint: Optional[str] = Field(default=None, description="Digest of command and parameters")


def constant_record(name: str, constant: Constant, **parameters: Any) -> ConstantRecord:
    return ConstantRecord(name=name, coefficient=format_fraction(constant.coefficient), tag=constant.to_tag(),
                          decimal=constant.value, description=constant.description, parameters=parameters)


def count_table(report: GrowthReport) -> CountTable:
    rows = [CountRow(**row.model_dump(include=set(REPORT_COLUMNS))) for row in report.rows]
    return CountTable(kind=report.kind.value, m=report.m, surface=report.surface,
                      predicted_constant=constant_record(report.kind.value, report.constant), rows=rows)


def report_json_schema() -> Dict[str, Any]:
    return ReportDocument.model_json_schema()
