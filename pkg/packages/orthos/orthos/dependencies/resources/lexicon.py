"""Lexicon: the MDAG that spelling and benchmarks query.

The path may name a compiled automaton or a plain word list; word lists
are normalized, sorted and compiled on load.
"""

from __future__ import annotations

from pathlib import Path

from diny import provider, singleton
from pydantic import Field

from ...fsa import Mdag, Trie, build_mdag, deserialize, parse_wordlist, prepare_words
from ...fsa.codec import MDAG_MAGIC, TRIE_MAGIC
from ...types.base import Frozen
from ..config.config import Config, ConfigError


def load_automaton(path: Path) -> Mdag | Trie:
    data = path.read_bytes()
    if data[:4] in (MDAG_MAGIC, TRIE_MAGIC):
        return deserialize(data)
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        msg = f"{path}: neither a compiled automaton nor a UTF-8 word list"
        raise ValueError(msg) from e
    return build_mdag(prepare_words(parse_wordlist(text, str(path))))


def load_lexicon(path: Path) -> Mdag:
    automaton = load_automaton(path)
    if not isinstance(automaton, Mdag):
        raise ConfigError(str(path), "is a TRIE; a lexicon must be an MDAG or a word list")
    return automaton


@singleton
class Lexicon(Frozen):
    path: Path | None = None
    automaton: Mdag = Field(default_factory=Mdag)


@provider(Lexicon)
def provide_lexicon(config: Config) -> Lexicon:
    path = config.require("lexicon", "--lexicon")
    return Lexicon(path=path, automaton=load_lexicon(path))
