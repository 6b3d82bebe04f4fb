"""Exception hierarchy shared by all qhsing modules."""

from __future__ import annotations


class QhsingError(Exception):
    """Base class for every error raised by this package."""


class InputError(QhsingError, ValueError):
    """Malformed or out-of-range user input (CLI exit code 2)."""


class WeightError(InputError):
    """A weight is unusable for the requested query."""


class PfaffianError(InputError):
    """The Pfaffian degree data is inconsistent."""


class TruncationError(QhsingError):
    """A coefficient beyond the truncation order was requested.

    ``needed`` is the smallest truncation that would have answered the
    query. Callers re-expand with at least that bound; nothing is ever
    silently extended or zero-filled.
    """

    def __init__(self, needed: int, truncation: int, operation: str | None = None):
        self.needed = needed
        self.truncation = truncation
        self.operation = operation
        where = f"{operation}: " if operation else ""
        super().__init__(
            f"{where}truncation exceeded: coefficient {needed} requested "
            f"but series is truncated at {truncation} (need truncation >= {needed})"
        )

    def in_operation(self, operation: str) -> TruncationError:
        return TruncationError(self.needed, self.truncation, operation)


class HypothesisError(QhsingError):
    """A required geometric hypothesis was not asserted by the user."""
