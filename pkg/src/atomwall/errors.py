"""Exception types shared across the package."""


class AtomWallError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(AtomWallError, ValueError):
    """An input lies outside the mathematical domain of a formula
    (non-positive separation or temperature, permittivity at or below
    the square-root singularity, and similar)."""


class ValidationError(AtomWallError, ValueError):
    """A value violates a structural rule (scenario ordering, grid
    shape, registry constraints, malformed configuration)."""


class ConflictError(ValidationError):
    """A registry name collides with an existing entry."""


class UnknownNameError(AtomWallError, KeyError):
    """A registry lookup for a name that is not present."""

    def __str__(self) -> str:  # KeyError quotes its args; keep plain text
        return self.args[0] if self.args else ""


class OutOfRangeError(AtomWallError, ValueError):
    """A root-finding target lies outside the values spanned by the
    search interval.  Carries the bracketing magnitudes."""

    def __init__(self, message: str, lo_value: float, hi_value: float, target: float):
        super().__init__(message)
        self.lo_value = lo_value
        self.hi_value = hi_value
        self.target = target
