"""
Exact asymptotic constants: a rational coefficient times 1, pi^2 or zeta(2).
"""
import logging
import math
from enum import Enum
from fractions import Fraction
from typing import Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from number_theory.arithmetic_functions import ZETA2
from utils.errors import InapplicableFormulaError
from utils.helpers import format_fraction

logger = logging.getLogger(__name__)

# lim N(T) / T^2 = (pi / zeta(2)) * c
GROWTH_FACTOR = math.pi / ZETA2


class Transcendental(str, Enum):
    ONE = "1"
    PI_SQUARED = "pi^2"
    ZETA2 = "zeta(2)"

    @property
    def value_float(self) -> float:
        return {Transcendental.ONE: 1.0,
                Transcendental.PI_SQUARED: math.pi ** 2,
                Transcendental.ZETA2: ZETA2}[self]


# zeta(2) = pi^2 / 6, so these two tags convert exactly
_IN_PI_SQUARED = {Transcendental.PI_SQUARED: Fraction(1), Transcendental.ZETA2: Fraction(1, 6)}


class Constant(BaseModel):
    """coefficient x transcendental; comparisons within a tag are exact."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coefficient: Fraction = Field(..., description="Exact rational coefficient")
    transcendental: Transcendental = Field(default=Transcendental.ONE)
    description: str = Field(default="")

    @field_validator('coefficient', mode='before')
    @classmethod
    def as_fraction(cls, value):
        if isinstance(value, float):
            raise TypeError("Constant coefficients must be exact")
        return Fraction(value)

    @property
    def value(self) -> float:
        return float(self.coefficient) * self.transcendental.value_float

    @property
    def growth_rate(self) -> float:
        """Predicted lim N(T) / T^2."""
        return GROWTH_FACTOR * self.value

    def in_pi_squared(self) -> 'Constant':
        if self.transcendental == Transcendental.ONE:
            raise InapplicableFormulaError("A rational constant has no pi^2 form")
        return Constant(coefficient=self.coefficient * _IN_PI_SQUARED[self.transcendental],
                        transcendental=Transcendental.PI_SQUARED, description=self.description)

    def same_value(self, other: 'Constant') -> bool:
        """Exact equality of values, converting between zeta(2) and pi^2."""
        if self.transcendental == other.transcendental:
            return self.coefficient == other.coefficient
        if Transcendental.ONE in (self.transcendental, other.transcendental):
            return self.coefficient == 0 and other.coefficient == 0
        return self.in_pi_squared().coefficient == other.in_pi_squared().coefficient

    def __add__(self, other: 'Constant') -> 'Constant':
        if not isinstance(other, Constant):
            return NotImplemented
        if self.transcendental == other.transcendental:
            return Constant(coefficient=self.coefficient + other.coefficient,
                            transcendental=self.transcendental, description=self.description)
        if Transcendental.ONE in (self.transcendental, other.transcendental):
            raise InapplicableFormulaError(
                f"Cannot add {self.render()} and {other.render()} exactly")
        total = self.in_pi_squared().coefficient + other.in_pi_squared().coefficient
        return Constant(coefficient=total, transcendental=Transcendental.PI_SQUARED,
                        description=self.description)

    def __mul__(self, scalar: Union[int, Fraction]) -> 'Constant':
        if isinstance(scalar, (float, Constant)) or isinstance(scalar, bool):
            return NotImplemented
        return Constant(coefficient=self.coefficient * Fraction(scalar),
                        transcendental=self.transcendental, description=self.description)

    __rmul__ = __mul__

    def to_tag(self) -> str:
        return self.transcendental.value

    def render(self) -> str:
        """e.g. "35/16", "2*zeta(2)", "1/3*pi^2"."""
        text = format_fraction(self.coefficient)
        if self.transcendental == Transcendental.ONE:
            return text
        return f"{text}*{self.transcendental.value}"

    def __str__(self) -> str:
        return f"{self.render()} = {self.value:.15g}"


def rational(value, description: str = "") -> Constant:
    return Constant(coefficient=Fraction(value), description=description)
