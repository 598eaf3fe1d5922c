"""
Twist coordinates (t_h, t_v) of a d-symmetric surface, a point of T^2_d.
"""
import logging
import math
import numbers
from fractions import Fraction
from typing import Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from modular_group.matrices import IntegerMatrix2
from modular_group.torus_points import TorusPoint
from utils.errors import InfiniteOrbitError, TwistParseError

logger = logging.getLogger(__name__)

Coordinate = Union[Fraction, float]


def _coerce(value) -> Coordinate:
    if isinstance(value, bool):
        raise TypeError("booleans are not twist coordinates")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    try:
        return float(value)
    except (TypeError, ValueError) as e:
        raise TypeError(f"Unsupported twist coordinate {value!r}") from e


def _reduce(value: Coordinate, modulus: int) -> Coordinate:
    reduced = value % modulus
    # float % can round a tiny negative up to the modulus itself
    if isinstance(reduced, float) and reduced >= modulus:
        reduced = 0.0
    return reduced


class TwistPoint(BaseModel):
    """
    Twist coordinates normalised into [0, d)^2.

    Both coordinates are exact Fractions, or both are floats; a float in one
    coordinate turns the other into a float as well.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    t_h: Coordinate = Field(..., description="Horizontal twist")
    t_v: Coordinate = Field(..., description="Vertical twist")
    modulus: int = Field(default=1, ge=1, description="d, the twist lives on R^2 / d Z^2")

    @model_validator(mode='before')
    @classmethod
    def normalise(cls, data):
        if not isinstance(data, dict):
            return data
        data = dict(data)
        modulus = data.get('modulus', 1)
        values = [_coerce(data[key]) for key in ('t_h', 't_v')]
        if any(isinstance(v, float) for v in values):
            values = [float(v) for v in values]
        if isinstance(modulus, int) and modulus >= 1:
            values = [_reduce(v, modulus) for v in values]
        data['t_h'], data['t_v'] = values
        return data

    @property
    def exact(self) -> bool:
        return isinstance(self.t_h, Fraction)

    @property
    def h(self) -> int:
        """Integer part of t_h."""
        return int(math.floor(self.t_h))

    @property
    def v(self) -> int:
        """Integer part of t_v."""
        return int(math.floor(self.t_v))

    @property
    def fractional(self) -> Tuple[Coordinate, Coordinate]:
        """The base-torus point ({t_h}, {t_v})."""
        return self.t_h - self.h, self.t_v - self.v

    @property
    def order(self) -> int:
        """Exact order of the twist as a point of T^2_d."""
        return self.as_torus_point().order

    @property
    def base_order(self) -> int:
        """Exact order of ({t_h}, {t_v}) on the unit torus."""
        if not self.exact:
            raise InfiniteOrbitError("A floating-point twist has no finite order")
        return math.lcm(self.t_h.denominator, self.t_v.denominator)

    def as_torus_point(self) -> TorusPoint:
        if not self.exact:
            raise InfiniteOrbitError(f"Twist ({self.t_h}, {self.t_v}) is not rational")
        return TorusPoint(x=self.t_h, y=self.t_v, modulus=self.modulus)

    def with_modulus(self, modulus: int) -> 'TwistPoint':
        return TwistPoint(t_h=self.t_h, t_v=self.t_v, modulus=modulus)

    def act(self, A: IntegerMatrix2) -> 'TwistPoint':
        t_h, t_v = A.apply(self.t_h, self.t_v)
        return TwistPoint(t_h=t_h, t_v=t_v, modulus=self.modulus)

    def negate(self) -> 'TwistPoint':
        return TwistPoint(t_h=-self.t_h, t_v=-self.t_v, modulus=self.modulus)

    def rotate_quarter(self) -> 'TwistPoint':
        """Image under the quarter turn [[0, -1], [1, 0]]: (t_h, t_v) -> (-t_v, t_h)."""
        return TwistPoint(t_h=-self.t_v, t_v=self.t_h, modulus=self.modulus)

    def __str__(self) -> str:
        return f"({self.t_h}, {self.t_v}) mod {self.modulus}"


def parse_twist(text: str, d: int, exact: Optional[bool] = None) -> TwistPoint:
    """
    Parses "x,y" into a TwistPoint on T^2_d.

    Args:
        text (str): Two comma separated numbers, either both rational
            ("1/2", "3") or both decimal ("0.3", "1e-2").
        d (int): Symmetry order, the modulus of the twist torus.
        exact (Optional[bool]): None detects the mode from the text; True reads
            decimals as exact rationals; False forces floating point.

    Returns:
        TwistPoint: The normalised twist.

    Raises:
        TwistParseError: Wrong number of parts, unparsable numbers, or mixed
            rational and decimal notation in auto-detect mode.
    """
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2 or not all(parts):
        raise TwistParseError(f"Twist must look like 'x,y', got {text!r}")
    decimal = [any(ch in part.lower() for ch in ".e") for part in parts]
    if exact is None:
        if decimal[0] != decimal[1]:
            raise TwistParseError(f"Twist {text!r} mixes rational and decimal notation")
        exact = not decimal[0]
    try:
        if exact:
            values = [Fraction(part) for part in parts]
        else:
            values = [float(Fraction(part)) if "/" in part else float(part) for part in parts]
    except (ValueError, ZeroDivisionError) as e:
        raise TwistParseError(f"Cannot parse twist {text!r}: {e}") from e
    return TwistPoint(t_h=values[0], t_v=values[1], modulus=d)
