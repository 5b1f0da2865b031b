"""orthos search: words matching a grapheme pattern such as (πσ|ψ)(ι|η)χ."""

from __future__ import annotations

from diny import inject

from ..dependencies.config.config import Config
from ..dependencies.params.search_params import SearchParams
from ..dependencies.resources.lexicon import load_automaton
from ..fsa import regex_search
from ..types.regex import GraphemeRegex
from ..utils.greek import nfc


@inject
def cmd_search(params: SearchParams, config: Config) -> None:
    # No match is an answer, not a finding: exit 0 either way.
    regex = GraphemeRegex.parse(nfc(params.pattern))
    automaton = load_automaton(config.require("lexicon", "LEXICON"))
    for word in regex_search(automaton, regex):
        print(word)
