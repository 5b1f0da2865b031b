"""Closure: every word offered as a synonym or antonym must itself be a lemma."""

from __future__ import annotations

from ..types.thesaurus import ClosureFinding, FindingKind, Relation
from .store import Thesaurus


def closure_findings(thesaurus: Thesaurus) -> list[ClosureFinding]:
    """One finding per (lemma, meaning, word) not matched by a headword.

    Words found only through the form index are reported as form-level
    notes; words found nowhere are violations.
    """
    findings: list[ClosureFinding] = []
    for lemma in thesaurus.lemmas:
        for m, meaning in enumerate(lemma.meanings, start=1):
            words = {w: Relation.SYNONYM for w in meaning.synonyms}
            for w in meaning.antonyms:
                words.setdefault(w, Relation.ANTONYM)
            for word, relation in words.items():
                if thesaurus.by_headword(word):
                    continue
                found = thesaurus.postings(word)
                kind = FindingKind.FORM_LEVEL if found else FindingKind.UNRESOLVED
                findings.append(
                    ClosureFinding(
                        lemma_id=lemma.id,
                        headword=lemma.headword,
                        meaning=m,
                        relation=relation,
                        word=word,
                        kind=kind,
                    )
                )
    return findings


def check_closure(thesaurus: Thesaurus) -> list[ClosureFinding]:
    """The violations only; an empty list means the thesaurus is closed."""
    return [f for f in closure_findings(thesaurus) if f.is_violation]
