"""Errors raised while loading spelling resources."""

from __future__ import annotations


class ClassTableError(ValueError):
    """A malformed line in an equivalence-class file."""

    def __init__(self, source: str, line: int, reason: str) -> None:
        super().__init__(f"{source}:{line}: {reason}")
        self.source = source
        self.line = line
        self.reason = reason
