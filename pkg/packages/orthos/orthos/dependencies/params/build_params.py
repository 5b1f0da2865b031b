"""BuildParams: inputs of `orthos build`."""

from __future__ import annotations

from enum import Enum
from pathlib import Path

from diny import singleton

from ...types.base import Frozen


class AutomatonKind(Enum):
    MDAG = "mdag"
    # Record ids are 1-based ranks in the sorted word list.
    TRIE = "trie"


@singleton
class BuildParams(Frozen):
    wordlist: Path = Path()
    out: Path = Path()
    kind: AutomatonKind = AutomatonKind.MDAG
