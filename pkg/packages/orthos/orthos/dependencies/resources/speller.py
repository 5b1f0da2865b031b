"""SpellChecker: the loaded lexicon bundled with a class table."""

from __future__ import annotations

from diny import provider, singleton

from ...spelling.classes import default_class_table, load_class_table
from ...spelling.suggest import Speller
from ...types.base import Frozen
from ..config.config import Config
from .lexicon import Lexicon


@singleton
class SpellChecker(Frozen):
    speller: Speller


@provider(SpellChecker)
def provide_spell_checker(lexicon: Lexicon, config: Config) -> SpellChecker:
    if config.classes is None:
        table = default_class_table()
    else:
        table = load_class_table(config.require("classes", "--classes"))
    speller = Speller.create(
        lexicon.automaton,
        table,
        combined_cap=config.combined_cap,
        extra_letters=config.extra_letters,
    )
    return SpellChecker(speller=speller)
