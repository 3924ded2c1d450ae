"""Exception hierarchy shared by every layer of the package."""


class CpsError(Exception):
    """Base class for all construction and verification errors."""


class DimensionError(CpsError, ValueError):
    """Operands have incompatible sizes."""


class RankError(CpsError, ValueError):
    """A family that must be linearly independent is not."""


class ClosureError(CpsError, ValueError):
    """A span is not closed under the matrix commutator.

    ``pair`` holds the offending basis indices and ``residual`` the part of
    the commutator that falls outside the span.
    """

    def __init__(self, pair, residual):
        self.pair = pair
        self.residual = residual
        super().__init__(f"bracket of basis elements {pair} leaves the span")


class ConsistencyError(CpsError, ValueError):
    """A value that must be real has a nonzero imaginary part."""


class DomainError(CpsError, ValueError):
    """An argument is outside the domain of the operation."""


class ConstructionError(CpsError):
    """A derived structure failed its defining identities."""


class NotEinsteinError(CpsError, ValueError):
    """The Ricci form is not a constant multiple of the metric."""
