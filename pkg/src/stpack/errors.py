"""Exception types shared across the toolkit."""

from __future__ import annotations


class BudgetExceededError(RuntimeError):
    """Raised when an exhaustive search would exceed its enumeration budget.

    ``best_known`` carries the best upper bound established before the
    search was abandoned (``None`` when nothing was learned).
    """

    def __init__(self, message: str, best_known: int | None = None):
        super().__init__(message)
        self.best_known = best_known


class InvariantViolation(AssertionError):
    """An internal consistency check failed; indicates a bug, not bad input."""
