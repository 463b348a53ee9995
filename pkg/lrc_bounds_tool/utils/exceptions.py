"""
Exceptions shared by the apps.
"""


class SearchLimitExceeded(Exception):
    """
    Raised when an exhaustive search would go past the guard configured in the
    settings.
    """

    def __init__(self, guard: str, requested: int, limit: int):
        self.guard = guard
        self.requested = requested
        self.limit = limit
        super().__init__(f"{guard}: {requested} exceeds the configured limit of {limit}")


class InvariantViolation(AssertionError):
    """
    Raised when a postcondition that is proven to hold does not.

    It always signals a bug, never bad input.
    """
