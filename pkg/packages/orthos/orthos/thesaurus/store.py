"""The lemma store and its form index.

Every morphological form of every lemma is a key in a record trie. The
record points into a table of postings, each a sorted tuple of the ids of
the lemmas that list the form, so forms shared by several lemmas resolve to
all of them.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from pathlib import Path

from pydantic import PrivateAttr, TypeAdapter, ValidationError

from ..fsa import Trie, automaton_stats, build_trie
from ..types.base import Frozen
from ..types.thesaurus import Alternatives, Lemma, ThesaurusStats
from ..utils.greek import nfc
from .errors import (
    DanglingReferenceError,
    DuplicateIdError,
    LemmaInvariantError,
    ThesaurusParseError,
)

_LEMMAS = TypeAdapter(list[Lemma])
# pydantic reports malformed JSON as "... at line L column C".
_JSON_POSITION = re.compile(r"\s*at line (\d+) column (\d+)$")


class Thesaurus(Frozen):
    """Lemmas in file order, indexed by id, headword and every form.

    Build through `build_thesaurus` or `load`, which check the lemma
    invariants; the constructor only indexes.
    """

    lemmas: tuple[Lemma, ...] = ()

    _by_id: dict[int, Lemma] = PrivateAttr()
    _headwords: dict[str, tuple[int, ...]] = PrivateAttr()
    _index: Trie = PrivateAttr()
    _postings: tuple[tuple[int, ...], ...] = PrivateAttr()

    def model_post_init(self, __context: object) -> None:
        self._by_id = {lemma.id: lemma for lemma in self.lemmas}
        heads: dict[str, list[int]] = {}
        owners: dict[str, list[int]] = {}
        for lemma in self.lemmas:
            heads.setdefault(lemma.headword, []).append(lemma.id)
            for form in dict.fromkeys(lemma.forms):
                owners.setdefault(form, []).append(lemma.id)
        self._headwords = {h: tuple(sorted(ids)) for h, ids in heads.items()}
        forms = sorted(owners)
        self._postings = tuple(tuple(sorted(owners[f])) for f in forms)
        self._index = build_trie((f, i) for i, f in enumerate(forms))

    @property
    def index(self) -> Trie:
        return self._index

    def get(self, lemma_id: int) -> Lemma | None:
        return self._by_id.get(lemma_id)

    def by_headword(self, word: str) -> list[Lemma]:
        return [self._by_id[i] for i in self._headwords.get(nfc(word), ())]

    def lookup(self, word_form: str) -> list[Lemma]:
        return lookup(self, word_form)

    def form_count(self) -> int:
        return len(self._postings)

    def postings(self, word_form: str) -> tuple[int, ...]:
        record = self._index.lookup(word_form)
        return () if record is None else self._postings[record]


def build_thesaurus(lemmas: Iterable[Lemma], source: str = "<thesaurus>") -> Thesaurus:
    """Check the lemma invariants and link the lemmas into a Thesaurus."""
    lemmas = list(lemmas)
    seen: dict[int, int] = {}
    for i, lemma in enumerate(lemmas):
        where = f"{source}[{i}]"
        if lemma.id in seen:
            raise DuplicateIdError(lemma.id, where)
        seen[lemma.id] = i
        _check_lemma(lemma, where)
    for i, lemma in enumerate(lemmas):
        for ref in lemma.related:
            if ref not in seen:
                raise DanglingReferenceError(lemma.id, ref, f"{source}[{i}].related")
    return Thesaurus(lemmas=tuple(lemmas))


def _check_lemma(lemma: Lemma, where: str) -> None:
    def fail(reason: str) -> None:
        raise LemmaInvariantError(lemma.id, where, reason)

    if not lemma.headword:
        fail("headword is empty")
    if any(not f for f in lemma.forms):
        fail("a form is empty")
    if lemma.headword not in lemma.forms:
        fail(f"headword {lemma.headword!r} is not among its forms")
    if not lemma.meanings:
        fail("no meanings")
    for m, meaning in enumerate(lemma.meanings, start=1):
        if not meaning.synonyms:
            fail(f"meaning {m} has no synonyms")
        both = set(meaning.synonyms) & set(meaning.antonyms)
        if both:
            fail(f"meaning {m} lists {sorted(both)} as synonym and antonym")


def load(path: Path) -> Thesaurus:
    """Read a thesaurus JSON file: a list of lemma objects."""
    source = str(path)
    try:
        lemmas = _LEMMAS.validate_json(path.read_text(encoding="utf-8"))
    except ValidationError as e:
        location, reason = _first_problem(e)
        raise ThesaurusParseError(source, location, reason) from e
    return build_thesaurus(lemmas, source)


def _first_problem(e: ValidationError) -> tuple[str, str]:
    """Location and reason: a line and column for bad JSON, an item path otherwise."""
    err = e.errors()[0]
    if err["type"] == "json_invalid":
        reason = str(err.get("ctx", {}).get("error", err["msg"]))
        if m := _JSON_POSITION.search(reason):
            return f"line {m[1]} column {m[2]}", reason[: m.start()]
        return "", reason
    loc = err["loc"]
    location = f"[{loc[0]}]" + "".join(f".{p}" for p in loc[1:]) if loc else ""
    return location, err["msg"]


def dumps(thesaurus: Thesaurus) -> str:
    return _LEMMAS.dump_json(list(thesaurus.lemmas), indent=2).decode("utf-8") + "\n"


def save(thesaurus: Thesaurus, path: Path) -> None:
    path.write_text(dumps(thesaurus), encoding="utf-8")


def lookup(thesaurus: Thesaurus, word_form: str) -> list[Lemma]:
    """Every lemma listing `word_form` among its forms, by ascending id."""
    ids = thesaurus.postings(nfc(word_form))
    return [lemma for i in ids if (lemma := thesaurus.get(i)) is not None]


def suggest_alternatives(thesaurus: Thesaurus, word_form: str) -> list[Alternatives]:
    """One entry per meaning of each matching lemma, synonyms in stored order."""
    return [
        Alternatives(
            lemma_id=lemma.id,
            headword=lemma.headword,
            style=lemma.style,
            domain=lemma.domain,
            meaning=m,
            synonyms=meaning.synonyms,
            antonyms=meaning.antonyms,
            examples=meaning.examples,
            related=tuple(r.headword for r in related(thesaurus, lemma)),
        )
        for lemma in lookup(thesaurus, word_form)
        for m, meaning in enumerate(lemma.meanings, start=1)
    ]


def thesaurus_stats(thesaurus: Thesaurus) -> ThesaurusStats:
    return ThesaurusStats(
        lemmas=len(thesaurus.lemmas),
        forms=thesaurus.form_count(),
        meanings=sum(len(lemma.meanings) for lemma in thesaurus.lemmas),
        index=automaton_stats(thesaurus.index),
    )


def related(thesaurus: Thesaurus, lemma: Lemma) -> Sequence[Lemma]:
    """The lemmas `lemma` links to, in the order it lists them."""
    return [r for i in lemma.related if (r := thesaurus.get(i)) is not None]
