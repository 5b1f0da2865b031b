"""Errors raised while loading or linking a thesaurus file."""

from __future__ import annotations


class ThesaurusError(ValueError):
    """Base for every thesaurus failure."""


class ThesaurusParseError(ThesaurusError):
    def __init__(self, path: str, location: str, reason: str) -> None:
        where = f"{path} {location}" if location else path
        super().__init__(f"{where}: {reason}")
        self.path = path
        self.location = location
        self.reason = reason


class DuplicateIdError(ThesaurusError):
    def __init__(self, lemma_id: int, location: str) -> None:
        super().__init__(f"{location}: lemma id {lemma_id} is used more than once.")
        self.id = lemma_id
        self.location = location


class DanglingReferenceError(ThesaurusError):
    """A lemma's related list names an id no lemma has."""

    def __init__(self, lemma_id: int, ref: int, location: str) -> None:
        super().__init__(f"{location}: lemma {lemma_id} refers to missing lemma {ref}.")
        self.id = lemma_id
        self.ref = ref
        self.location = location


class LemmaInvariantError(ThesaurusError):
    def __init__(self, lemma_id: int, location: str, reason: str) -> None:
        super().__init__(f"{location}: lemma {lemma_id}: {reason}")
        self.id = lemma_id
        self.location = location
        self.reason = reason
