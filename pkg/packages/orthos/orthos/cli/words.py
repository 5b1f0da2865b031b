"""orthos words: every stored word in sorted order."""

from __future__ import annotations

from diny import inject

from ..dependencies.config.config import Config
from ..dependencies.resources.lexicon import load_automaton
from ..fsa import Trie


@inject
def cmd_words(config: Config) -> None:
    automaton = load_automaton(config.require("lexicon", "LEXICON"))
    if isinstance(automaton, Trie):
        for key, record in automaton.items():
            print(f"{key}\t{record}")
        return
    for word in automaton.words():
        print(word)
