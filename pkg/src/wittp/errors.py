"""Shared exception types."""


class IdentityViolationError(RuntimeError):
    """An identity the library asserts unconditionally has failed.

    Carries the offending input in ``details`` so a failure can be
    reproduced from the report alone.
    """

    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = dict(details or {})


class BoundExceededError(ValueError):
    """A configured size bound refused the requested computation."""
