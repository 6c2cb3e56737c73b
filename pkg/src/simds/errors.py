"""Exceptions shared across the package."""


class BudgetError(RuntimeError):
    """A requested computation exceeds the configured desk-scale budget."""


class InternalMismatchError(RuntimeError):
    """Two routes that must agree produced different results."""
