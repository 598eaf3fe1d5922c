"""
SL2(Z) elements and the reduction of primitive directions to the horizontal.
"""
import logging
import math
import random
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from number_theory.arithmetic_functions import extended_gcd
from utils.errors import NonPrimitiveDirectionError, NotUnimodularError

logger = logging.getLogger(__name__)


class IntegerMatrix2(BaseModel):
    """Row-major [[a, b], [c, d]] with ad - bc = 1."""
    model_config = ConfigDict(frozen=True)

    a: int = Field(..., description="Top-left entry")
    b: int = Field(..., description="Top-right entry")
    c: int = Field(..., description="Bottom-left entry")
    d: int = Field(..., description="Bottom-right entry")

    @model_validator(mode='after')
    def check_unimodular(self) -> 'IntegerMatrix2':
        if self.a * self.d - self.b * self.c != 1:
            raise NotUnimodularError(
                f"Matrix [[{self.a}, {self.b}], [{self.c}, {self.d}]] has determinant "
                f"{self.a * self.d - self.b * self.c}, expected 1")
        return self

    def __matmul__(self, other: 'IntegerMatrix2') -> 'IntegerMatrix2':
        return IntegerMatrix2(
            a=self.a * other.a + self.b * other.c,
            b=self.a * other.b + self.b * other.d,
            c=self.c * other.a + self.d * other.c,
            d=self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> 'IntegerMatrix2':
        return IntegerMatrix2(a=self.d, b=-self.b, c=-self.c, d=self.a)

    def apply(self, x, y) -> Tuple:
        """Matrix times the column vector (x, y); works for ints, Fractions and floats."""
        return self.a * x + self.b * y, self.c * x + self.d * y

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


IDENTITY = IntegerMatrix2(a=1, b=0, c=0, d=1)
MINUS_IDENTITY = IntegerMatrix2(a=-1, b=0, c=0, d=-1)
S = IntegerMatrix2(a=0, b=-1, c=1, d=0)
T = IntegerMatrix2(a=1, b=1, c=0, d=1)

GENERATORS = (S, T, S.inverse(), T.inverse())


def check_primitive(p: int, q: int) -> None:
    if (p, q) == (0, 0) or math.gcd(p, q) != 1:
        raise NonPrimitiveDirectionError(f"Direction ({p}, {q}) is not primitive")


def reduce_to_horizontal(p: int, q: int) -> IntegerMatrix2:
    """
    Canonical A in SL2(Z) with A (p, q)^T = (1, 0)^T.

    The first row (a, b) solves a p + b q = 1 and is taken of minimal
    a^2 + b^2 along the solution line, ties going to the larger a; the second
    row is (-q, p).

    Args:
        p (int): First coordinate of a primitive direction.
        q (int): Second coordinate.

    Returns:
        IntegerMatrix2: The reduction matrix.

    Raises:
        NonPrimitiveDirectionError: For (0, 0) or gcd(p, q) > 1.
    """
    check_primitive(p, q)
    _, a0, b0 = extended_gcd(p, q)
    norm = p * p + q * q
    k_floor = (a0 * q - b0 * p) // norm
    best = None
    for k in (k_floor, k_floor + 1):
        a, b = a0 - k * q, b0 + k * p
        key = (a * a + b * b, -a)
        if best is None or key < best[0]:
            best = (key, a, b)
    _, a, b = best
    return IntegerMatrix2(a=a, b=b, c=-q, d=p)


def random_word(rng: random.Random, length: int) -> IntegerMatrix2:
    """Product of `length` generators drawn uniformly from S, T and their inverses."""
    result = IDENTITY
    for _ in range(length):
        result = result @ rng.choice(GENERATORS)
    return result


def gamma1_membership(A: IntegerMatrix2, n: int) -> bool:
    """True iff A = [[1, *], [0, 1]] modulo n."""
    if not isinstance(A, IntegerMatrix2):
        A = IntegerMatrix2(**dict(A))
    return (A.a - 1) % n == 0 and A.c % n == 0 and (A.d - 1) % n == 0
