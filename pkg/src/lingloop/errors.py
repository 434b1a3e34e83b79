"""Exception types. Everything user-facing derives from :class:`LingLoopError`."""
from __future__ import annotations


class LingLoopError(Exception):
    pass


class ValidationError(LingLoopError, ValueError):
    """Malformed input data (tables, wordlists, out-of-domain arguments)."""


class EncodingError(ValidationError):
    def __init__(self, offset: int, reason: str = "invalid utf-8"):
        self.offset = offset
        super().__init__(f"invalid encoding at byte offset {offset}: {reason}")


class TableError(ValidationError):
    pass


class ClosureError(TableError):
    def __init__(self, report):
        self.report = report
        shown = "; ".join(
            f"n={n} {spelling!r} has {count} letters" for n, spelling, count in report.violations
        )
        super().__init__(f"closure violation (nmax={report.nmax}): {shown}")


class WordlistError(ValidationError):
    pass


class DomainError(ValidationError):
    pass
