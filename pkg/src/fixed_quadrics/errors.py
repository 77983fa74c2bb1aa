"""Exception hierarchy for fixed_quadrics."""


class QuadricsError(Exception):
    """Base class for every error raised by this package."""

    pass


class EmptyPartition(QuadricsError, ValueError):
    """Raised when a partition has no positive part."""

    pass


class PartitionSyntaxError(QuadricsError, ValueError):
    """Raised when partition text cannot be parsed."""

    pass


class IndexOutOfRange(QuadricsError, IndexError):
    """Raised when a part value or index lies outside the valid range."""

    pass


class BoundExceeded(QuadricsError, ValueError):
    """Raised when a size exceeds a configured computation bound."""

    pass


class MissingAssignment(QuadricsError, KeyError):
    """Raised when an evaluation point does not assign every variable."""

    def __str__(self) -> str:
        return Exception.__str__(self)


class DimensionMismatch(QuadricsError, ValueError):
    """Raised when matrix shapes are incompatible."""

    pass


class NotSquare(DimensionMismatch):
    """Raised when a square matrix is required."""

    pass


class NotNilpotent(QuadricsError, ValueError):
    """Raised when N**n != 0 for an n-by-n matrix N."""

    pass


class BadShape(QuadricsError, ValueError):
    """Raised when a block is requested with p < q."""

    pass


class SingularS(QuadricsError, ValueError):
    """Raised when a conjugating matrix is not invertible."""

    pass


class InexactDivision(QuadricsError, ArithmeticError):
    """Raised when a polynomial division leaves a remainder."""

    pass


class WitnessNotFound(QuadricsError):
    """Raised when no nonzero minor of the expected size could be certified."""

    pass


class LetterOverflow(QuadricsError, ValueError):
    """Raised when letter naming is requested for more than 26 variables."""

    pass


class InvalidSize(QuadricsError, ValueError):
    """Raised when a requested size is not a positive integer."""

    pass


class ConfigError(QuadricsError, ValueError):
    """Raised for invalid settings or config files."""

    pass
