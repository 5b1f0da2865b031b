from __future__ import annotations

import random

import pytest

from orthos.fsa import build_mdag
from orthos.utils.greek import is_accented
from orthos.utils.synthetic import PARADIGMS, misspell, synthetic_lexicon, unknown_words
from orthos.utils.timing import latencies, lookup_rate, percentile


class TestSyntheticLexicon:
    def test_size_is_a_lower_bound(self) -> None:
        words = synthetic_lexicon(500)
        assert len(words) >= 500
        assert words == sorted(set(words))

    def test_seeded(self) -> None:
        assert synthetic_lexicon(300, seed=7) == synthetic_lexicon(300, seed=7)
        assert synthetic_lexicon(300, seed=7) != synthetic_lexicon(300, seed=8)

    def test_zero(self) -> None:
        assert synthetic_lexicon(0) == []

    def test_negative(self) -> None:
        with pytest.raises(ValueError, match="non-negative"):
            synthetic_lexicon(-1)

    def test_every_form_carries_one_accent(self) -> None:
        for word in synthetic_lexicon(200):
            assert sum(is_accented(ch) for ch in word) == 1

    def test_endings_share_suffix_states(self) -> None:
        words = synthetic_lexicon(2000)
        mdag = build_mdag(words)
        # Suffix sharing keeps the automaton far below one state per letter.
        assert mdag.node_count < sum(len(w) for w in words) / 4

    def test_paradigm_endings_are_distinct(self) -> None:
        for endings in PARADIGMS:
            assert len(set(endings)) == len(endings)


class TestMisspell:
    def test_one_edit(self) -> None:
        from orthos.spelling.distance import levenshtein

        rng = random.Random(3)
        for word in synthetic_lexicon(100)[:100]:
            typo = misspell(word, rng)
            assert levenshtein(word, typo) <= 2

    def test_unknown_words_are_unknown(self) -> None:
        words = synthetic_lexicon(1000)
        typos = unknown_words(words, 50, seed=1)
        assert len(typos) == 50
        assert len(set(typos)) == 50
        assert not set(typos) & set(words)

    def test_unknown_words_seeded(self) -> None:
        words = synthetic_lexicon(1000)
        assert unknown_words(words, 10, seed=2) == unknown_words(words, 10, seed=2)

    def test_tiny_lexicon_runs_out(self) -> None:
        assert len(unknown_words(["α"], 1000)) < 1000

    def test_empty_lexicon(self) -> None:
        with pytest.raises(ValueError, match="empty lexicon"):
            unknown_words([], 1)


class TestTiming:
    def test_percentile_nearest_rank(self) -> None:
        samples = [0.4, 0.1, 0.3, 0.2]
        assert percentile(samples, 50) == 0.2
        assert percentile(samples, 90) == 0.4
        assert percentile(samples, 100) == 0.4
        assert percentile(samples, 0) == 0.1

    def test_percentile_of_nothing(self) -> None:
        with pytest.raises(ValueError, match="no samples"):
            percentile([], 50)

    def test_latencies_one_per_word(self) -> None:
        seen: list[str] = []
        out = latencies(seen.append, ["α", "β", "γ"])
        assert seen == ["α", "β", "γ"]
        assert len(out) == 3
        assert all(t >= 0 for t in out)

    def test_lookup_rate_positive(self) -> None:
        mdag = build_mdag(["αβ", "αγ"])
        assert lookup_rate(mdag, ["αβ", "αδ"]) > 0
