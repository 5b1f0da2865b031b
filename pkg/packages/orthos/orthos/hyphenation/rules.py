"""Grammar tables for Greek syllabification.

Rules, in the order the engine applies them:

1. every syllable holds at least one vowel
2. V-C-V splits before the consonant
3. a consonant cluster splits before itself when its first two letters can
   start a Greek word (a legal onset), otherwise after its first letter
4. adjacent vowels split, except the combinations (αυ, ευ, ...) and digraphs
   (αι, ει, ου, ...) that sound as one unit, and the ambiguous bigrams whose
   split depends on pronunciation and is left to a decision tree
"""

from __future__ import annotations

from pydantic import PrivateAttr, model_validator

from ..types.base import Frozen
from ..utils.greek import LOWER_CONSONANTS, LOWER_VOWELS

ONSETS = frozenset(
    "βγ βδ βλ βρ γδ γκ γλ γν γρ δρ θλ θν θρ κβ κλ κν κρ κτ μν μπ ντ πλ πν πρ πτ "
    "σβ σγ σθ σκ σλ σμ σν σπ στ σφ σχ τζ τμ τρ τσ φθ φλ φρ φτ χθ χλ χν χρ χτ".split()
)

# αύ is the usual spelling of the accented combination; άυ is kept as listed.
COMBINATIONS = frozenset("αυ αύ άυ ευ εύ ηυ ηύ".split())

DIGRAPHS = frozenset("αι αί ει εί οι οί υι υί ου ού".split())

# υι and υί only read as a digraph when no ο or ε comes right before the υ.
CONTEXT_DIGRAPHS = frozenset({"υι", "υί"})
CONTEXT_BLOCKERS = frozenset("οε")

# Ordered by corpus frequency, most frequent first.
AMBIGUOUS_BIGRAMS: tuple[str, ...] = tuple(
    "ια ιο ιά ιώ ιε ιω ιό υό υα ιέ αϊ υο υά οϊ εϊ αη όη υώ άι υέ όι άη όε ηώ".split()
)


class SyllabificationRules(Frozen):
    vowels: frozenset[str] = LOWER_VOWELS
    consonants: frozenset[str] = LOWER_CONSONANTS
    onsets: frozenset[str] = ONSETS
    combinations: frozenset[str] = COMBINATIONS
    digraphs: frozenset[str] = DIGRAPHS
    ambiguous: tuple[str, ...] = AMBIGUOUS_BIGRAMS

    _ambiguous_set: frozenset[str] = PrivateAttr()

    @model_validator(mode="after")
    def _check_tables(self) -> SyllabificationRules:
        if self.vowels & self.consonants:
            msg = f"letters are both vowel and consonant: {sorted(self.vowels & self.consonants)}"
            raise ValueError(msg)
        for onset in self.onsets:
            if len(onset) != 2 or not set(onset) <= self.consonants:
                msg = f"onset {onset!r} is not two consonants"
                raise ValueError(msg)
        for name, table in (
            ("combination", self.combinations),
            ("digraph", self.digraphs),
            ("ambiguous bigram", self.ambiguous),
        ):
            for pair in table:
                if len(pair) != 2 or not set(pair) <= self.vowels:
                    msg = f"{name} {pair!r} is not two vowels"
                    raise ValueError(msg)
        if len(set(self.ambiguous)) != len(self.ambiguous):
            msg = "ambiguous bigrams repeat"
            raise ValueError(msg)
        return self

    def model_post_init(self, __context: object) -> None:
        self._ambiguous_set = frozenset(self.ambiguous)

    @property
    def ambiguous_set(self) -> frozenset[str]:
        return self._ambiguous_set

    def is_unit(self, run: str, i: int) -> bool:
        """Whether the vowels at run[i:i+2] stay together by rule 4a or 4b."""
        pair = run[i : i + 2]
        if pair in self.combinations:
            return True
        if pair not in self.digraphs:
            return False
        return not (pair in CONTEXT_DIGRAPHS and i > 0 and run[i - 1] in CONTEXT_BLOCKERS)

    def vowel_units(self, run: str) -> list[str]:
        """Partition a vowel run left to right into one- and two-vowel units."""
        units: list[str] = []
        i = 0
        while i < len(run):
            if i + 1 < len(run) and self.is_unit(run, i):
                units.append(run[i : i + 2])
                i += 2
            else:
                units.append(run[i])
                i += 1
        return units

    def cluster_cut(self, cluster: str) -> int:
        """Offset inside a medial consonant cluster where the syllable breaks."""
        if len(cluster) == 1 or cluster[:2] in self.onsets:
            return 0
        return 1
