from __future__ import annotations

from enum import Enum

from pydantic import Field

from .base import Frozen, NfcStr, NfcStrs
from .stats import AutomatonStats


class Meaning(Frozen):
    """One sense of a lemma. The first synonym is the best alternative."""

    synonyms: NfcStrs = ()
    antonyms: NfcStrs = ()
    examples: NfcStrs = ()


class Lemma(Frozen):
    id: int = Field(ge=0)
    headword: NfcStr
    style: NfcStrs = ()
    domain: NfcStrs = ()
    forms: NfcStrs = ()
    related: tuple[int, ...] = ()
    meanings: tuple[Meaning, ...] = ()


class Relation(Enum):
    SYNONYM = "synonym"
    ANTONYM = "antonym"


class FindingKind(Enum):
    UNRESOLVED = "unresolved"
    # The word is a form of some lemma but no lemma's headword.
    FORM_LEVEL = "form-level"


class ClosureFinding(Frozen):
    lemma_id: int
    headword: str
    meaning: int
    relation: Relation
    word: str
    kind: FindingKind

    @property
    def is_violation(self) -> bool:
        return self.kind is FindingKind.UNRESOLVED


class Alternatives(Frozen):
    """One meaning of a matched lemma, ready to offer as replacements."""

    lemma_id: int
    headword: str
    style: tuple[str, ...] = ()
    domain: tuple[str, ...] = ()
    meaning: int
    synonyms: tuple[str, ...]
    antonyms: tuple[str, ...] = ()
    examples: tuple[str, ...] = ()
    # Headwords of the lemmas this one links to, such as its passive voice.
    related: tuple[str, ...] = ()


class ThesaurusStats(Frozen):
    lemmas: int = Field(ge=0)
    forms: int = Field(ge=0)
    meanings: int = Field(ge=0)
    index: AutomatonStats

    def line(self) -> str:
        return f"lemmas={self.lemmas} forms={self.forms} meanings={self.meanings}"
