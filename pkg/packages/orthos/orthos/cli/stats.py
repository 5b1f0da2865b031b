"""orthos stats: size figures of a compiled lexicon or word list."""

from __future__ import annotations

from diny import inject

from ..dependencies.config.config import Config
from ..dependencies.resources.lexicon import load_automaton
from ..fsa import automaton_stats


@inject
def cmd_stats(config: Config) -> None:
    automaton = load_automaton(config.require("lexicon", "LEXICON"))
    print(automaton_stats(automaton).line())
