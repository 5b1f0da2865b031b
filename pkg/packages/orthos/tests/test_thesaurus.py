from __future__ import annotations

import json
import re
from pathlib import Path

import pytest

from conftest import DATA_DIR
from orthos.thesaurus import (
    DanglingReferenceError,
    DuplicateIdError,
    LemmaInvariantError,
    Thesaurus,
    ThesaurusError,
    ThesaurusParseError,
    build_thesaurus,
    check_closure,
    closure_findings,
    load,
    lookup,
    related,
    save,
    suggest_alternatives,
    thesaurus_stats,
)
from orthos.types.thesaurus import FindingKind, Lemma, Meaning, Relation

AGKYLONO = [
    "αγκυλώνω",
    "αγκυλώνεις",
    "αγκυλώνει",
    "αγκυλώνουμε",
    "αγκυλώνετε",
    "αγκυλώνουν",
    "αγκύλωσα",
    "αγκύλωσες",
    "αγκύλωσε",
    "αγκυλώσαμε",
    "αγκυλώσατε",
    "αγκύλωσαν",
]


@pytest.fixture(scope="module")
def thesaurus() -> Thesaurus:
    return load(DATA_DIR / "thesaurus.json")


def _lemma(
    lemma_id: int,
    headword: str,
    *,
    forms: tuple[str, ...] | None = None,
    synonyms: tuple[str, ...] = ("x",),
    antonyms: tuple[str, ...] = (),
    related: tuple[int, ...] = (),
) -> Lemma:
    return Lemma(
        id=lemma_id,
        headword=headword,
        forms=forms if forms is not None else (headword,),
        related=related,
        meanings=(Meaning(synonyms=synonyms, antonyms=antonyms),),
    )


def _write(tmp_path: Path, raw: object) -> Path:
    path = tmp_path / "thes.json"
    path.write_text(json.dumps(raw, ensure_ascii=False), encoding="utf-8")
    return path


def _raw(lemma_id: int, headword: str, **extra: object) -> dict[str, object]:
    entry: dict[str, object] = {
        "id": lemma_id,
        "headword": headword,
        "forms": [headword],
        "meanings": [{"synonyms": ["λέξη"]}],
    }
    entry.update(extra)
    return entry


# ---------------------------------------------------------------------------
# Loading
# ---------------------------------------------------------------------------


class TestLoad:
    def test_bundled_file(self, thesaurus: Thesaurus) -> None:
        assert len(thesaurus.lemmas) == 22
        assert [lemma.id for lemma in thesaurus.lemmas] == list(range(1, 23))

    def test_headwords_are_forms(self, thesaurus: Thesaurus) -> None:
        for lemma in thesaurus.lemmas:
            assert lemma.headword in lemma.forms

    def test_style_and_domain_kept(self, thesaurus: Thesaurus) -> None:
        (booking,) = lookup(thesaurus, "αγκαζάρω")
        (blood,) = lookup(thesaurus, "αιμοσφαιρίνη")
        assert booking.style == ("informal",)
        assert blood.domain == ("Biology",)

    def test_dangling_related(self, tmp_path: Path) -> None:
        path = _write(tmp_path, [_raw(1, "α", related=[2])])
        with pytest.raises(DanglingReferenceError) as exc:
            load(path)
        assert exc.value.id == 1
        assert exc.value.ref == 2
        assert exc.value.location.endswith("[0].related")

    def test_duplicate_id(self, tmp_path: Path) -> None:
        path = _write(tmp_path, [_raw(7, "α"), _raw(7, "β")])
        with pytest.raises(DuplicateIdError) as exc:
            load(path)
        assert exc.value.id == 7
        assert exc.value.location.endswith("[1]")

    def test_headword_missing_from_forms(self, tmp_path: Path) -> None:
        path = _write(tmp_path, [_raw(1, "α", forms=["β"])])
        with pytest.raises(LemmaInvariantError, match="not among its forms"):
            load(path)

    def test_meaning_without_synonyms(self, tmp_path: Path) -> None:
        path = _write(tmp_path, [_raw(1, "α", meanings=[{"synonyms": []}])])
        with pytest.raises(LemmaInvariantError, match="meaning 1 has no synonyms"):
            load(path)

    def test_no_meanings(self, tmp_path: Path) -> None:
        path = _write(tmp_path, [_raw(1, "α", meanings=[])])
        with pytest.raises(LemmaInvariantError, match="no meanings"):
            load(path)

    def test_synonym_and_antonym_at_once(self, tmp_path: Path) -> None:
        meanings = [{"synonyms": ["γ"], "antonyms": ["γ"]}]
        path = _write(tmp_path, [_raw(1, "α", meanings=meanings)])
        with pytest.raises(LemmaInvariantError, match="synonym and antonym"):
            load(path)

    def test_bad_json_reports_line(self, tmp_path: Path) -> None:
        path = tmp_path / "thes.json"
        path.write_text('[\n  {"id": 1,\n', encoding="utf-8")
        with pytest.raises(ThesaurusParseError) as exc:
            load(path)
        assert re.fullmatch(r"line \d+ column \d+", exc.value.location)
        assert "at line" not in exc.value.reason

    def test_top_level_must_be_a_list(self, tmp_path: Path) -> None:
        path = _write(tmp_path, _raw(1, "α"))
        with pytest.raises(ThesaurusParseError, match="valid list") as exc:
            load(path)
        assert exc.value.location == ""

    def test_bad_field_reports_path(self, tmp_path: Path) -> None:
        path = _write(tmp_path, [_raw(1, "α"), _raw(-3, "β")])
        with pytest.raises(ThesaurusParseError) as exc:
            load(path)
        assert exc.value.location == "[1].id"

    def test_errors_are_value_errors(self) -> None:
        assert issubclass(ThesaurusError, ValueError)

    def test_save_then_load(self, thesaurus: Thesaurus, tmp_path: Path) -> None:
        path = tmp_path / "copy.json"
        save(thesaurus, path)
        again = load(path)
        assert again.lemmas == thesaurus.lemmas

    def test_forms_are_normalized(self) -> None:
        decomposed = "\u03b1\u0301"
        th = build_thesaurus([_lemma(1, decomposed)])
        assert [lemma.id for lemma in lookup(th, "ά")] == [1]

    def test_headword_and_synonyms_are_normalized(self) -> None:
        lemma = _lemma(1, "\u03b1\u0301", synonyms=("\u03b5\u0301",))
        assert lemma.headword == "ά"
        assert lemma.meanings[0].synonyms == ("έ",)


# ---------------------------------------------------------------------------
# Lookup
# ---------------------------------------------------------------------------


class TestLookup:
    @pytest.mark.parametrize("form", AGKYLONO)
    def test_every_form_reaches_lemma(self, thesaurus: Thesaurus, form: str) -> None:
        assert [lemma.headword for lemma in lookup(thesaurus, form)] == ["αγκυλώνω"]

    def test_passive_is_separate(self, thesaurus: Thesaurus) -> None:
        found = lookup(thesaurus, "αγκυλώθηκε")
        assert [lemma.headword for lemma in found] == ["αγκυλώνομαι"]
        assert 1 in found[0].related

    def test_related_in_listed_order(self) -> None:
        th = build_thesaurus(
            [_lemma(1, "α", related=(3, 2)), _lemma(2, "β"), _lemma(3, "γ")]
        )
        lemma = th.get(1)
        assert lemma is not None
        assert [r.headword for r in related(th, lemma)] == ["γ", "β"]

    def test_unknown_form(self, thesaurus: Thesaurus) -> None:
        assert lookup(thesaurus, "σπίτι") == []
        assert lookup(thesaurus, "") == []

    def test_prefix_is_not_a_form(self, thesaurus: Thesaurus) -> None:
        assert lookup(thesaurus, "αγκυλώ") == []

    def test_shared_form_by_ascending_id(self) -> None:
        th = build_thesaurus(
            [
                _lemma(9, "κόβω", forms=("κόβω", "κόψε")),
                _lemma(2, "κόψη", forms=("κόψη", "κόψε")),
            ]
        )
        assert [lemma.id for lemma in lookup(th, "κόψε")] == [2, 9]
        assert th.postings("κόψε") == (2, 9)

    def test_method_matches_function(self, thesaurus: Thesaurus) -> None:
        assert thesaurus.lookup("πάγωσε") == lookup(thesaurus, "πάγωσε")


class TestIndex:
    def test_every_form_is_indexed(self, thesaurus: Thesaurus) -> None:
        for lemma in thesaurus.lemmas:
            for form in lemma.forms:
                assert lemma.id in thesaurus.postings(form)

    def test_every_headword_is_reachable(self, thesaurus: Thesaurus) -> None:
        for lemma in thesaurus.lemmas:
            assert lemma in lookup(thesaurus, lemma.headword)

    def test_index_holds_only_forms(self, thesaurus: Thesaurus) -> None:
        forms = {f for lemma in thesaurus.lemmas for f in lemma.forms}
        assert {key for key, _ in thesaurus.index.items()} == forms


# ---------------------------------------------------------------------------
# Alternatives
# ---------------------------------------------------------------------------


class TestSuggestAlternatives:
    def test_one_entry_per_meaning(self, thesaurus: Thesaurus) -> None:
        alts = suggest_alternatives(thesaurus, "αγκύλωσε")
        assert [a.meaning for a in alts] == [1, 2]
        assert alts[0].synonyms[0] == "τσιμπάω"
        assert alts[1].synonyms[0] == "καθηλώνω"

    def test_stored_order_kept(self, thesaurus: Thesaurus) -> None:
        alts = suggest_alternatives(thesaurus, "αγκυλώνω")
        assert alts[0].synonyms == ("τσιμπάω", "κεντάω", "τρυπάω", "βελονιάζω")

    def test_antonyms_and_style(self, thesaurus: Thesaurus) -> None:
        (alt,) = suggest_alternatives(thesaurus, "θέρμανε")
        assert alt.style == ("formal",)
        assert alt.antonyms == ("παγώνω",)

    def test_related_headwords(self, thesaurus: Thesaurus) -> None:
        (alt,) = suggest_alternatives(thesaurus, "αγκυλώθηκε")
        assert alt.headword == "αγκυλώνομαι"
        assert alt.related == ("αγκυλώνω",)

    def test_no_related(self, thesaurus: Thesaurus) -> None:
        (alt,) = suggest_alternatives(thesaurus, "θέρμανε")
        assert alt.related == ()

    def test_unknown_word(self, thesaurus: Thesaurus) -> None:
        assert suggest_alternatives(thesaurus, "σπίτι") == []


# ---------------------------------------------------------------------------
# Closure
# ---------------------------------------------------------------------------


def _scan_closure(thesaurus: Thesaurus) -> set[tuple[int, int, str]]:
    """Unresolved (lemma, meaning, word) triples by nested scan."""
    known = {f for lemma in thesaurus.lemmas for f in lemma.forms}
    out: set[tuple[int, int, str]] = set()
    for lemma in thesaurus.lemmas:
        for m, meaning in enumerate(lemma.meanings, start=1):
            for word in (*meaning.synonyms, *meaning.antonyms):
                if word not in known:
                    out.add((lemma.id, m, word))
    return out


class TestClosure:
    def test_bundled_file_is_closed(self, thesaurus: Thesaurus) -> None:
        assert check_closure(thesaurus) == []

    def test_form_level_note(self, thesaurus: Thesaurus) -> None:
        (note,) = closure_findings(thesaurus)
        assert note.kind is FindingKind.FORM_LEVEL
        assert note.headword == "κεντάω"
        assert note.word == "τσιμπώ"
        assert note.relation is Relation.SYNONYM
        assert not note.is_violation

    def test_removed_lemma_is_reported(self, thesaurus: Thesaurus) -> None:
        kept = [lemma for lemma in thesaurus.lemmas if lemma.id != 8]
        th = build_thesaurus(kept)
        violations = {(f.lemma_id, f.meaning, f.word) for f in check_closure(th)}
        assert violations == {(1, 2, "παραλύω"), (7, 1, "παραλύω"), (9, 1, "παραλύω")}

    def test_antonym_violation(self) -> None:
        th = build_thesaurus(
            [
                _lemma(1, "άσπρος", synonyms=("λευκός",), antonyms=("μαύρος",)),
                _lemma(2, "λευκός", synonyms=("άσπρος",)),
            ]
        )
        (finding,) = check_closure(th)
        assert finding.relation is Relation.ANTONYM
        assert finding.word == "μαύρος"

    def test_matches_nested_scan(self, thesaurus: Thesaurus) -> None:
        kept = [lemma for lemma in thesaurus.lemmas if lemma.id not in {3, 13, 22}]
        th = build_thesaurus(kept)
        got = {(f.lemma_id, f.meaning, f.word) for f in check_closure(th)}
        assert got == _scan_closure(th)
        assert got


# ---------------------------------------------------------------------------
# Stats
# ---------------------------------------------------------------------------


class TestStats:
    def test_counts(self, thesaurus: Thesaurus) -> None:
        stats = thesaurus_stats(thesaurus)
        forms = {f for lemma in thesaurus.lemmas for f in lemma.forms}
        assert stats.lemmas == 22
        assert stats.forms == len(forms)
        assert stats.meanings == 26
        assert stats.index.terminals == len(forms)

    def test_line(self, thesaurus: Thesaurus) -> None:
        stats = thesaurus_stats(thesaurus)
        assert stats.line() == f"lemmas=22 forms={stats.forms} meanings=26"
