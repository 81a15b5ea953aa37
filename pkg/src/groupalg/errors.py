"""Exception types shared across the package.

Two families matter to callers: SpecError for malformed specs, files, and
arguments (the CLI maps these to exit code 2) and DomainError for requests
that are well-formed but mathematically refused (exit code 3).
"""


class GroupAlgError(Exception):
    """Base class for all package-specific errors."""


class SpecError(GroupAlgError, ValueError):
    """Malformed spec string, file, or constructor argument."""


class DomainError(GroupAlgError, ValueError):
    """Well-formed input refused on mathematical grounds."""


class BudgetExceededError(DomainError):
    """An exhaustive computation would exceed its configured budget."""
