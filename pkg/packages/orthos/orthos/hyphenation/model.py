"""HyphenationModel: rules, one tree per ambiguous pair, and an exception list.

The model is saved as JSON holding the trees, the exceptions and the
training minimum; the rule tables are built in.
"""

from __future__ import annotations

from pathlib import Path

from pydantic import Field, ValidationError, field_validator, model_validator

from ..types.base import Frozen
from ..types.hyphenation import Hyphenation, HyphenationSource
from ..utils.greek import LOWER_VOWELS, nfc
from .errors import HyphenationError, ModelFileError
from .features import features_at
from .id3 import DEFAULT_MIN_PATTERNS, DecisionTree
from .rules import SyllabificationRules
from .syllabify import check_alphabet, cut, lower, syllabify


class ExceptionList(Frozen):
    """Whole-word hyphenations that override the rules and trees.

    Keys are lower-case NFC words; values are their hyphenation with `-`.
    """

    entries: dict[str, str] = Field(default_factory=dict)

    @field_validator("entries")
    @classmethod
    def _check_entries(cls, entries: dict[str, str]) -> dict[str, str]:
        for word, hyphenated in entries.items():
            if hyphenated.replace("-", "") != word:
                msg = f"exception {hyphenated!r} does not spell {word!r}"
                raise ValueError(msg)
            for syl in hyphenated.split("-"):
                if not any(ch in LOWER_VOWELS for ch in syl):
                    msg = f"exception {hyphenated!r} has a syllable without a vowel"
                    raise ValueError(msg)
        return entries

    def get(self, word: str) -> str | None:
        return self.entries.get(word)

    def __contains__(self, word: object) -> bool:
        return word in self.entries


class HyphenationModel(Frozen):
    rules: SyllabificationRules = Field(default_factory=SyllabificationRules, exclude=True)
    trees: dict[str, DecisionTree] = Field(default_factory=dict)
    exceptions: ExceptionList = Field(default_factory=ExceptionList)
    min_patterns: int = Field(default=DEFAULT_MIN_PATTERNS, ge=1)

    @model_validator(mode="after")
    def _trees_on_ambiguous_pairs(self) -> HyphenationModel:
        stray = sorted(set(self.trees) - self.rules.ambiguous_set)
        if stray:
            msg = f"trees for pairs that are not ambiguous: {stray}"
            raise ValueError(msg)
        return self

    def decide(self, word: str, at: int) -> bool:
        """Split the pair at word[at:at+2]? Untrained pairs never split."""
        tree = self.trees.get(word[at : at + 2])
        if tree is None:
            return False
        return tree.classify(features_at(word, at))

    def hyphenate(self, word: str) -> Hyphenation:
        return hyphenate(word, self)

    def without_exceptions(self) -> HyphenationModel:
        return self.model_copy(update={"exceptions": ExceptionList()})


def hyphenate(word: str, model: HyphenationModel) -> Hyphenation:
    """Exception list first, then rules with the trees deciding ambiguous pairs."""
    word = nfc(word)
    if not word:
        msg = "Cannot hyphenate an empty word."
        raise HyphenationError(msg)
    check_alphabet(word, model.rules)
    stored = model.exceptions.get(lower(word))
    if stored is not None:
        at = 0
        offsets: list[int] = []
        for syl in stored.split("-")[:-1]:
            at += len(syl)
            offsets.append(at)
        return Hyphenation(syllables=cut(word, tuple(offsets)), source=HyphenationSource.EXCEPTION)
    return syllabify(word, model.rules, model.decide)


def save_model(model: HyphenationModel, path: Path) -> None:
    path.write_text(model.model_dump_json(indent=2) + "\n", encoding="utf-8")


def load_model(path: Path) -> HyphenationModel:
    try:
        return HyphenationModel.model_validate_json(path.read_bytes())
    except ValidationError as e:
        raise ModelFileError(str(path), _first_problem(e)) from e


def _first_problem(e: ValidationError) -> str:
    err = e.errors()[0]
    where = ".".join(str(p) for p in err["loc"])
    return f"{where}: {err['msg']}" if where else err["msg"]
