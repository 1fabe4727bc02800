"""Exception types shared across the package."""


class DomainError(ValueError):
    """Invalid parameters or inputs for a mathematical operation."""


class BudgetExceeded(DomainError):
    """An enumeration would exceed its configured size limit."""


class InconsistencyError(RuntimeError):
    """Two independent computations disagree; indicates a bug or a counterexample."""
