"""Train the per-pair trees and build the exception list from a corpus."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from ..types.hyphenation import HyphenatedForm
from .features import extract_patterns
from .id3 import DEFAULT_MIN_PATTERNS, DecisionTree, train_tree
from .model import ExceptionList, HyphenationModel, hyphenate
from .rules import SyllabificationRules
from .syllabify import Policy, deterministic_oracle, lower


def train_trees(
    corpus: Sequence[HyphenatedForm],
    *,
    min_patterns: int = DEFAULT_MIN_PATTERNS,
    rules: SyllabificationRules | None = None,
) -> dict[str, DecisionTree]:
    """One tree for every ambiguous pair that occurs in the corpus."""
    rules = rules or SyllabificationRules()
    trees: dict[str, DecisionTree] = {}
    for bigram in rules.ambiguous:
        patterns = extract_patterns(corpus, bigram)
        if patterns:
            trees[bigram] = train_tree(patterns, min_patterns=min_patterns)
    return trees


def build_exceptions(
    corpus: Iterable[HyphenatedForm],
    model: HyphenationModel,
    homographs: Iterable[str] = (),
) -> ExceptionList:
    """Corpus forms the trees get wrong, plus homographs kept unsplit.

    Any exceptions already in `model` are ignored. A word the corpus lists
    with more than one hyphenation is a homograph: like the words in
    `homographs`, it is stored with its never-split hyphenation, which wins
    over every corpus line for it.
    """
    base = model.without_exceptions()
    spellings: dict[str, set[str]] = {}
    for form in corpus:
        spellings.setdefault(lower(form.word), set()).add(lower(str(form)))

    entries: dict[str, str] = {}
    unsplit = set(homographs)
    for word, hyphenated in spellings.items():
        if len(hyphenated) > 1:
            unsplit.add(word)
            continue
        (expected,) = hyphenated
        if lower(str(hyphenate(word, base))) != expected:
            entries[word] = expected
    for word in unsplit:
        conservative = deterministic_oracle(word, model.rules, Policy.NEVER_SPLIT)
        entries[lower(conservative.word)] = lower(str(conservative))
    return ExceptionList(entries=dict(sorted(entries.items())))


def train_model(
    corpus: Sequence[HyphenatedForm],
    *,
    min_patterns: int = DEFAULT_MIN_PATTERNS,
    homographs: Iterable[str] = (),
) -> HyphenationModel:
    """Trees and exceptions in one step."""
    model = HyphenationModel(
        trees=train_trees(corpus, min_patterns=min_patterns), min_patterns=min_patterns
    )
    exceptions = build_exceptions(corpus, model, homographs)
    return model.model_copy(update={"exceptions": exceptions})
