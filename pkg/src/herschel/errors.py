"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested function."""


class ConvergenceError(ArithmeticError):
    """A series did not meet its stopping rule within the allowed terms."""


class PrecisionError(ArithmeticError):
    """Two working precisions disagreed beyond the requested tolerance."""
