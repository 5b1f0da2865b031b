"""Finite-state lexicons: MDAG and TRIE construction, search and storage.

Pure library, no DI.
"""

from .automaton import Automaton
from .codec import deserialize, deserialize_mdag, deserialize_trie, serialize
from .mdag import Mdag, MdagBuilder, build_mdag
from .search import regex_search, search_groups
from .stats import automaton_stats, source_size
from .trie import Trie, build_trie
from .wordlist import parse_wordlist, prepare_words, read_wordlist

__all__ = [
    "Automaton",
    "Mdag",
    "MdagBuilder",
    "Trie",
    "automaton_stats",
    "build_mdag",
    "build_trie",
    "deserialize",
    "deserialize_mdag",
    "deserialize_trie",
    "parse_wordlist",
    "prepare_words",
    "read_wordlist",
    "regex_search",
    "search_groups",
    "serialize",
    "source_size",
]
