"""
Number Theory Module for SymCover.

Exact multiplicative functions (phi, psi, divisor counts, Jordan totient),
coprime zeta sums and the primitive-vector sweep domain.
"""

from .arithmetic_functions import (
    Factorization, ZETA2, factorize, prime_divisors, euler_phi, dedekind_psi,
    divisor_count, divisors, jordan_totient2, orbit_size, gcd3, extended_gcd,
    coprime_zeta2, coprime_zeta2_factor, coprime_zeta2_partial,
    inverse_square_sum, coprime_inverse_square_sum,
)
from .lattice_vectors import primitive_vectors, primitive_vector_block, sweep_rows, count_primitive_vectors

__all__ = [
    "Factorization",
    "ZETA2",
    "factorize",
    "prime_divisors",
    "euler_phi",
    "dedekind_psi",
    "divisor_count",
    "divisors",
    "jordan_totient2",
    "orbit_size",
    "gcd3",
    "extended_gcd",
    "coprime_zeta2",
    "coprime_zeta2_factor",
    "coprime_zeta2_partial",
    "inverse_square_sum",
    "coprime_inverse_square_sum",
    "primitive_vectors",
    "primitive_vector_block",
    "sweep_rows",
    "count_primitive_vectors",
]
