"""Exception types shared across the library.

The CLI maps ValidationError to exit status 2 and the resource-limit
errors to exit status 3; everything else is a genuine bug.
"""


class ValidationError(ValueError):
    """Input violates a structural precondition or an axiom."""


class BudgetExceededError(RuntimeError):
    """An exhaustive enumeration exceeded its configured budget."""


class UnsupportedSizeError(RuntimeError):
    """Input is valid but outside the supported size/dimension range."""
