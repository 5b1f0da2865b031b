"""Greek hyphenation: grammar rules, per-pair decision trees, exceptions."""

from .corpus import parse_corpus, read_corpus
from .errors import AlphabetError, CorpusFormatError, HyphenationError, TrainingError
from .features import FEATURE_NAMES, Pattern, extract_patterns
from .id3 import DecisionTree, train_tree
from .model import ExceptionList, HyphenationModel, hyphenate, load_model, save_model
from .rules import AMBIGUOUS_BIGRAMS, SyllabificationRules
from .stats import ambiguity_stats
from .syllabify import Policy, deterministic_oracle
from .training import build_exceptions, train_model, train_trees

__all__ = [
    "AMBIGUOUS_BIGRAMS",
    "FEATURE_NAMES",
    "AlphabetError",
    "CorpusFormatError",
    "DecisionTree",
    "ExceptionList",
    "HyphenationError",
    "HyphenationModel",
    "Pattern",
    "Policy",
    "SyllabificationRules",
    "TrainingError",
    "ambiguity_stats",
    "build_exceptions",
    "deterministic_oracle",
    "extract_patterns",
    "hyphenate",
    "load_model",
    "parse_corpus",
    "read_corpus",
    "save_model",
    "train_model",
    "train_tree",
    "train_trees",
]
