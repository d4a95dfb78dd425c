"""Exception hierarchy shared by every module in the package.

All domain errors derive from :class:`WinWinError` so callers can catch one
base class at API boundaries. The concrete classes also subclass ``ValueError``
because they signal contract violations on inputs.
"""

from __future__ import annotations


class WinWinError(Exception):
    """Base class for all errors raised by this package."""


class InvalidFrameError(WinWinError, ValueError):
    """Negotiation interval is degenerate, reversed, or non-finite."""


class InvalidInputError(WinWinError, ValueError):
    """A settled value (or other numeric input) is not a finite number."""


class InvalidTargetError(WinWinError, ValueError):
    """A requested win share lies outside the closed interval [0, 1]."""


class InvalidRangeError(WinWinError, ValueError):
    """A sampling grid request is malformed (too few points, start >= end)."""


class RecordError(WinWinError, ValueError):
    """A ledger record could not be resolved against its derivation rule.

    Carries the offending record's label so batch processors can report
    failures inline without losing track of which row broke.
    """

    def __init__(self, label: str, message: str):
        super().__init__(f"record {label!r}: {message}")
        self.label = label
        self.reason = message


class EmptyLedgerError(WinWinError, ValueError):
    """A summary was requested for a ledger with no records."""


class ParseError(WinWinError, ValueError):
    """Input data (CSV or JSON) does not conform to the deal-record schema."""
