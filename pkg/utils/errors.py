"""
Exception hierarchy for SymCover.

Every error raised on purpose by the library derives from SymCoverError,
which itself is a ValueError so callers validating input can catch either.
"""


class SymCoverError(ValueError):
    """Base class for all SymCover errors."""


class DomainError(SymCoverError):
    """An arithmetic function was called outside its domain (e.g. n <= 0)."""


class NotUnimodularError(SymCoverError):
    """A 2x2 integer matrix does not have determinant 1."""


class NonPrimitiveDirectionError(SymCoverError):
    """A direction (p, q) is zero or not primitive."""


class InfiniteOrbitError(SymCoverError):
    """An SL2(Z) orbit was requested for a point with an irrational coordinate."""


class DegenerateSurfaceError(SymCoverError):
    """The operation needs two distinct cone points but the twist is a lattice point."""


class NonDegenerateSurfaceError(SymCoverError):
    """The operation only makes sense for a twist on the integer lattice."""


class ConePointHitError(SymCoverError):
    """A traced leaf runs into a cone point; the caller should perturb the start."""


class DivisibilityError(SymCoverError):
    """A class index m does not divide the symmetry order d."""


class InapplicableFormulaError(SymCoverError):
    """The hypotheses of a closed formula are not met by the input."""


class TwistParseError(SymCoverError):
    """A twist given as text could not be parsed."""
