"""
Exact multiplicative arithmetic functions.

Everything here works on Python integers and fractions.Fraction so that the
closed-form constants built on top of it can be compared bit for bit.
Inputs stay well below 10**9, so trial division with a 2-3-5 wheel is enough.
"""
import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

import numpy as np
from scipy.special import zeta

from utils.errors import DomainError

logger = logging.getLogger(__name__)

Factorization = Tuple[Tuple[int, int], ...]

ZETA2 = float(zeta(2.0))

_WHEEL_INCREMENTS = (4, 2, 4, 2, 4, 6, 2, 6)


def _require_positive(n: int, name: str = "n") -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise DomainError(f"{name} must be an integer, got {n!r}")
    if n < 1:
        raise DomainError(f"{name} must be >= 1, got {n}")


@lru_cache(maxsize=8192)
def factorize(n: int) -> Factorization:
    """
    Prime factorization of n by wheel trial division.

    Args:
        n (int): A positive integer.

    Returns:
        Factorization: ((p1, e1), (p2, e2), ...) with p1 < p2 < ...; empty for n = 1.
    """
    _require_positive(n)
    n = int(n)
    factors: List[Tuple[int, int]] = []
    for p in (2, 3, 5):
        exponent = 0
        while n % p == 0:
            n //= p
            exponent += 1
        if exponent:
            factors.append((p, exponent))
    candidate, step = 7, 0
    while candidate * candidate <= n:
        exponent = 0
        while n % candidate == 0:
            n //= candidate
            exponent += 1
        if exponent:
            factors.append((candidate, exponent))
        candidate += _WHEEL_INCREMENTS[step]
        step = (step + 1) % len(_WHEEL_INCREMENTS)
    if n > 1:
        factors.append((n, 1))
    return tuple(factors)


def prime_divisors(n: int) -> Tuple[int, ...]:
    return tuple(p for p, _ in factorize(n))


def euler_phi(n: int) -> int:
    """Euler's totient: n * prod_{p | n} (1 - 1/p)."""
    primes = prime_divisors(n)
    result = int(n)
    for p in primes:
        result = result // p * (p - 1)
    return result


def dedekind_psi(n: int) -> int:
    """Dedekind's psi: n * prod_{p | n} (1 + 1/p)."""
    primes = prime_divisors(n)
    result = int(n)
    for p in primes:
        result = result // p * (p + 1)
    return result


def divisor_count(n: int) -> int:
    """Number of positive divisors, prod (e_i + 1)."""
    count = 1
    for _, exponent in factorize(n):
        count *= exponent + 1
    return count


@lru_cache(maxsize=4096)
def divisors(n: int) -> Tuple[int, ...]:
    """All positive divisors of n in increasing order."""
    result = [1]
    for p, exponent in factorize(n):
        result = [d * p ** k for d in result for k in range(exponent + 1)]
    return tuple(sorted(result))


def jordan_totient2(n: int) -> int:
    """J_2(n) = n^2 prod (1 - 1/p^2) = phi(n) psi(n)."""
    primes = prime_divisors(n)
    result = int(n) ** 2
    for p in primes:
        result = result // (p * p) * (p * p - 1)
    return result


def orbit_size(n: int) -> int:
    """Size of the SL2(Z) orbit of the order-n point [1/n, 0] on the unit torus."""
    return euler_phi(n) * dedekind_psi(n)


def gcd3(a: int, b: int, c: int) -> int:
    """gcd(a, b, c) with the convention gcd(0, 0, d) = d."""
    return math.gcd(math.gcd(a, b), c)


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """
    Extended Euclid.

    Returns:
        Tuple[int, int, int]: (g, x, y) with a*x + b*y = g and g = gcd(|a|, |b|) >= 0.
    """
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_x, x = x, old_x - quotient * x
        old_y, y = y, old_y - quotient * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def coprime_zeta2(n: int) -> float:
    """
    sum_{i >= 1, gcd(i, n) = 1} 1/i^2 through the Euler product
    zeta(2) * prod_{p | n} (1 - 1/p^2).
    """
    _require_positive(n)
    return ZETA2 * float(coprime_zeta2_factor(n))


def coprime_zeta2_factor(n: int) -> Fraction:
    """The exact rational factor prod_{p | n} (1 - 1/p^2) = J_2(n)/n^2."""
    return Fraction(jordan_totient2(n), int(n) ** 2)


def coprime_zeta2_partial(n: int, bound: int) -> float:
    """
    Direct partial sum sum_{1 <= i <= bound, gcd(i, n) = 1} 1/i^2, for
    cross-checking the Euler product.
    """
    _require_positive(n)
    if bound < 1:
        return 0.0
    indices = np.arange(1, int(bound) + 1, dtype=np.int64)
    kept = indices[np.gcd(indices, int(n)) == 1].astype(np.float64)
    # smallest terms first keeps the rounding error well below the tail
    return float(np.sum(1.0 / kept[::-1] ** 2))


def inverse_square_sum(values) -> Fraction:
    """Exact sum of 1/v^2 over the given positive integers."""
    values = [int(v) for v in values]
    if not values:
        return Fraction(0)
    common = math.lcm(*values)
    common_sq = common * common
    numerator = sum(common_sq // (v * v) for v in values)
    return Fraction(numerator, common_sq)


def coprime_inverse_square_sum(n: int, upper: int) -> Fraction:
    """Exact sum_{1 <= i <= upper, gcd(i, n) = 1} 1/i^2."""
    _require_positive(n)
    return inverse_square_sum(i for i in range(1, int(upper) + 1) if math.gcd(i, n) == 1)


if __name__ == '__main__':
    for value in (1, 6, 12, 360, 999983):
        print(f"n={value}: factors={factorize(value)} phi={euler_phi(value)} "
              f"psi={dedekind_psi(value)} D={divisor_count(value)}")
    print(f"coprime_zeta2(6) = {coprime_zeta2(6):.6f}, partial = {coprime_zeta2_partial(6, 10**6):.6f}")
