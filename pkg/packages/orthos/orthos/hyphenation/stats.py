"""How often each ambiguous pair occurs in a corpus, and how often it splits."""

from __future__ import annotations

from collections.abc import Sequence

from ..types.hyphenation import AmbiguityReport, AmbiguousBigram, HyphenatedForm
from .features import occurrences
from .rules import SyllabificationRules
from .syllabify import lower


def ambiguity_stats(
    corpus: Sequence[HyphenatedForm], rules: SyllabificationRules | None = None
) -> AmbiguityReport:
    rules = rules or SyllabificationRules()
    counts = {b: [0, 0] for b in rules.ambiguous}
    ambiguous_forms = 0
    for form in corpus:
        word = lower(form.word)
        cuts = form.boundaries
        found = False
        for bigram, tally in counts.items():
            for at in occurrences(word, bigram):
                found = True
                tally[0] += 1
                tally[1] += at + 1 in cuts
        ambiguous_forms += found
    return AmbiguityReport(
        bigrams=tuple(
            AmbiguousBigram(bigram=b, count=c, splits=s) for b, (c, s) in counts.items()
        ),
        forms=len(corpus),
        ambiguous_forms=ambiguous_forms,
    )
