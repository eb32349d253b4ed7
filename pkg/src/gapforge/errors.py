"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class GapforgeError(Exception):
    """Base class for all gapforge errors."""


class InputError(GapforgeError, ValueError):
    """Malformed or inconsistent input (dimension mismatch, bad parameters)."""


class ParseError(InputError):
    """A serialized document could not be decoded; the message names the field."""


class BudgetError(GapforgeError):
    """An exhaustive search or construction would exceed its declared budget."""

    def __init__(self, message, *, required=None, budget=None, reports=()):
        super().__init__(message)
        self.required = required
        self.budget = budget
        self.reports = list(reports)


class VerificationError(GapforgeError):
    """A claimed property failed its exact check."""


class NoInstanceFound(GapforgeError):
    """Rejection sampling exhausted its attempts."""

    def __init__(self, message, attempts):
        super().__init__(message)
        self.attempts = attempts
