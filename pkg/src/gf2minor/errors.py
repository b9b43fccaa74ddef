"""Exception types shared across the package."""

from __future__ import annotations


class MatroidError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MatroidError):
    """Bad argument: unknown label, dimension mismatch, malformed witness, ..."""


class PivotError(MatroidError):
    """Pivot requested on a zero entry."""


class CapacityError(MatroidError):
    """Input exceeds an exhaustive-enumeration guard; never silently truncated."""


class ParseError(InputError):
    """Malformed matrix or certificate file; message names the offending line."""
