"""Exception types shared across the package."""

from __future__ import annotations


class TurlexError(Exception):
    """Base class for errors raised by this package."""


class ParseError(TurlexError):
    """A resource or input file could not be parsed.

    Carries the one-based line number and, when known, the source name so
    callers can point at the offending line.
    """

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.message = message
        self.line = line
        self.source = source
        super().__init__(message)

    def __str__(self) -> str:
        prefix = ""
        if self.source is not None:
            prefix += f"{self.source}:"
        if self.line is not None:
            prefix += f"line {self.line}: "
        return prefix + self.message


class CandidateExplosionError(TurlexError):
    """Too many toggle positions for exhaustive candidate generation."""

    def __init__(self, word: str, positions: int, cap: int):
        self.word = word
        self.positions = positions
        self.cap = cap
        super().__init__(
            f"{word!r} has {positions} toggle positions, above the cap of {cap}; "
            f"refusing to enumerate 2**{positions} candidates"
        )
