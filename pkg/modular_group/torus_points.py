"""
Exact points of the torus T^2_d = R^2 / d Z^2 and the linear SL2(Z) action on them.
"""
import logging
import math
from fractions import Fraction
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from modular_group.matrices import IntegerMatrix2
from utils.errors import InfiniteOrbitError

logger = logging.getLogger(__name__)


def to_fraction(value) -> Fraction:
    """Coerces ints, Fractions and "p/q" strings; rejects floats."""
    if isinstance(value, bool):
        raise TypeError("booleans are not torus coordinates")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise InfiniteOrbitError(
            f"Floating-point coordinate {value!r} cannot be handled exactly; use a rational")
    raise TypeError(f"Unsupported coordinate type {type(value).__name__}")


class TorusPoint(BaseModel):
    """A point of T^2_d with exact rational coordinates reduced into [0, d)."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    x: Fraction = Field(..., description="First coordinate, 0 <= x < modulus")
    y: Fraction = Field(..., description="Second coordinate, 0 <= y < modulus")
    modulus: int = Field(default=1, ge=1, description="The torus is R^2 / modulus Z^2")

    @model_validator(mode='before')
    @classmethod
    def reduce_coordinates(cls, data):
        if not isinstance(data, dict):
            return data
        data = dict(data)
        modulus = data.get('modulus', 1)
        for key in ('x', 'y'):
            if key in data:
                value = to_fraction(data[key])
                if isinstance(modulus, int) and modulus >= 1:
                    value %= modulus
                data[key] = value
        return data

    @property
    def denominator(self) -> int:
        return math.lcm(self.x.denominator, self.y.denominator)

    @property
    def order(self) -> int:
        """Smallest n >= 1 with n * p = 0 on T^2_d."""
        return math.lcm((self.x / self.modulus).denominator, (self.y / self.modulus).denominator)

    @property
    def is_lattice_point(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1

    def negate(self) -> 'TorusPoint':
        return TorusPoint(x=-self.x, y=-self.y, modulus=self.modulus)

    def as_tuple(self) -> Tuple[Fraction, Fraction]:
        return self.x, self.y

    def __str__(self) -> str:
        return f"({self.x}, {self.y}) mod {self.modulus}"


def act(A: IntegerMatrix2, point: TorusPoint) -> TorusPoint:
    """
    A (x, y)^T reduced modulo d Z^2.

    Args:
        A (IntegerMatrix2): A determinant-one matrix; anything else is rejected
            when it is turned into an IntegerMatrix2.
        point (TorusPoint): The point to move.

    Returns:
        TorusPoint: The image point on the same torus.
    """
    if not isinstance(A, IntegerMatrix2):
        A = IntegerMatrix2(**dict(A))
    x, y = A.apply(point.x, point.y)
    return TorusPoint(x=x, y=y, modulus=point.modulus)
