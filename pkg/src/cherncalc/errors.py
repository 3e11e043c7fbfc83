"""Exception types shared across the calculus."""


class CalculusError(ValueError):
    """Base class for all domain errors raised by this package."""


class ContextError(CalculusError):
    """Operands belong to different ring contexts."""


class DegreeError(CalculusError):
    """A grading constraint was violated (wrong weighted degree)."""


class SymmetryError(CalculusError):
    """A polynomial expected to be symmetric in a variable group is not."""


class DomainError(CalculusError):
    """Arguments outside the mathematical domain of the operation."""
