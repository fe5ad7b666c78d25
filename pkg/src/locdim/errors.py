"""Exception hierarchy shared by all modules.

Every error raised for bad *domain* input derives from :class:`LocdimError`,
which the CLI maps to exit status 1.
"""

from __future__ import annotations


class LocdimError(Exception):
    """Base class for domain errors."""


class PreconditionError(LocdimError, ValueError):
    """An operation was called on input outside its precondition."""


class GroupTooLarge(LocdimError):
    """A group or enumeration exceeded a configured size cap."""


class PolynomialSyntaxError(LocdimError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class WildPrimeError(LocdimError):
    """The residue characteristic divides the ramification index."""


class SearchBudgetExceeded(LocdimError):
    """A witness search ran out of budget; nothing is claimed about existence."""


class FactorizationError(LocdimError):
    """An integer could not be factored within the configured cap."""


class CharacterizationMismatch(AssertionError):
    """Two independent computations of the same quantity disagreed.

    This is an internal consistency failure, never a user error.
    """
