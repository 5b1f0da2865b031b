"""Errors raised by the hyphenation engine, corpus reader and trainer."""

from __future__ import annotations


class HyphenationError(ValueError):
    """Base for every hyphenation failure."""


class AlphabetError(HyphenationError):
    """A word holds a character the syllabification rules do not cover."""

    def __init__(self, word: str, char: str, index: int) -> None:
        super().__init__(
            f"{word!r}: character {char!r} (U+{ord(char):04X}) at offset {index} "
            "is not a Greek letter."
        )
        self.word = word
        self.char = char
        self.index = index


class CorpusFormatError(HyphenationError):
    def __init__(self, path: str, line: int, reason: str) -> None:
        super().__init__(f"{path}:{line}: {reason}")
        self.path = path
        self.line = line
        self.reason = reason


class TrainingError(HyphenationError):
    pass


class ModelFileError(HyphenationError):
    def __init__(self, path: str, reason: str) -> None:
        super().__init__(f"{path}: {reason}")
        self.path = path
        self.reason = reason
