"""Thesaurus: lemmas reachable through any of their forms."""

from .closure import check_closure, closure_findings
from .errors import (
    DanglingReferenceError,
    DuplicateIdError,
    LemmaInvariantError,
    ThesaurusError,
    ThesaurusParseError,
)
from .store import (
    Thesaurus,
    build_thesaurus,
    load,
    lookup,
    related,
    save,
    suggest_alternatives,
    thesaurus_stats,
)

__all__ = [
    "DanglingReferenceError",
    "DuplicateIdError",
    "LemmaInvariantError",
    "Thesaurus",
    "ThesaurusError",
    "ThesaurusParseError",
    "build_thesaurus",
    "check_closure",
    "closure_findings",
    "load",
    "lookup",
    "related",
    "save",
    "suggest_alternatives",
    "thesaurus_stats",
]
