"""Exception hierarchy.

The CLI maps these onto exit statuses: ``InputError`` (and its subclasses)
exit with 2, ``UnsupportedError`` with 3, and ``CheckFailure`` with 1.
"""


class LieError(Exception):
    """Base class for every error raised by liemoduli."""


class InputError(LieError, ValueError):
    """Malformed or inconsistent input (dimension mismatch, bad JSON, ...)."""


class StructureError(InputError):
    """Structure constants violate antisymmetry or the Jacobi identity."""


class NotSubalgebraError(InputError):
    """A proposed subspace is not closed under the bracket."""


class RankError(InputError):
    """A matrix or a path does not have the required rank."""


class DegenerateParameterError(RankError):
    """A polynomial path drops rank at the requested parameter."""

    def __init__(self, message, parameter=None):
        super().__init__(message)
        self.parameter = parameter


class PreconditionError(InputError):
    """An operation was called outside its documented domain."""


class NotIntegrableError(PreconditionError):
    """The subalgebra is not algebraic, so it has no integrating group."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class MembershipError(InputError):
    """A point does not lie in the component it was registered with."""


class UnsupportedError(LieError):
    """The input is valid but outside the supported scope (catalog, spectra)."""


class CheckFailure(LieError):
    """A computed invariant or verification failed."""


class NonFlatIntersectionError(CheckFailure):
    """Fiberwise intersections jump in dimension along a family."""

    def __init__(self, message, dimensions=None):
        super().__init__(message)
        self.dimensions = dimensions or {}


class InterpolationError(CheckFailure):
    """An interpolated family failed verification at held-out samples."""
