"""Errors raised while building, reading, or decoding automata."""

from __future__ import annotations


class AutomatonError(ValueError):
    """Base for every automaton construction failure."""


class UnsortedInputError(AutomatonError):
    """Builder input is out of order or repeats a word.

    Carries the first offending pair so the caller can point at the line.
    """

    def __init__(self, previous: str, word: str) -> None:
        if previous == word:
            msg = f"Duplicate word {word!r} in sorted input."
        else:
            msg = f"Input is not sorted: {previous!r} is followed by {word!r}."
        super().__init__(msg)
        self.previous = previous
        self.word = word


class EmptyKeyError(AutomatonError):
    def __init__(self, index: int) -> None:
        super().__init__(f"Empty string at entry {index} cannot be stored.")
        self.index = index


class DuplicateKeyError(AutomatonError):
    def __init__(self, key: str) -> None:
        super().__init__(f"Duplicate key {key!r}.")
        self.key = key


class RecordRangeError(AutomatonError):
    """Record ids are stored as unsigned 64-bit integers."""

    def __init__(self, key: str, record: int) -> None:
        super().__init__(f"Record id {record} for key {key!r} is out of range.")
        self.key = key
        self.record = record


class WordListError(AutomatonError):
    def __init__(self, path: str, line: int, reason: str) -> None:
        super().__init__(f"{path}:{line}: {reason}")
        self.path = path
        self.line = line
        self.reason = reason


# --- Binary format ---


class AutomatonFormatError(ValueError):
    """Base for every failure to decode a compiled automaton."""


class BadMagicError(AutomatonFormatError):
    def __init__(self, found: bytes, expected: tuple[bytes, ...] = (b"MDG1", b"TRI1")) -> None:
        if not found:
            msg = "Empty input is not a compiled automaton."
        else:
            wanted = " or ".join(repr(m) for m in expected)
            msg = f"Magic {found!r} is not accepted here; expected {wanted}."
        super().__init__(msg)
        self.found = found
        self.expected = expected


class VersionMismatchError(AutomatonFormatError):
    def __init__(self, found: int, expected: int) -> None:
        super().__init__(f"Format version {found} is not supported (expected {expected}).")
        self.found = found
        self.expected = expected


class TruncatedPayloadError(AutomatonFormatError):
    def __init__(self, offset: int, needed: int) -> None:
        super().__init__(
            f"Payload ends at byte {offset}; {needed} more bytes were expected."
        )
        self.offset = offset
        self.needed = needed


class CorruptPayloadError(AutomatonFormatError):
    def __init__(self, offset: int, reason: str) -> None:
        super().__init__(f"Corrupt payload at byte {offset}: {reason}")
        self.offset = offset
        self.reason = reason
