"""BenchParams: workload knobs of `orthos bench`."""

from __future__ import annotations

from pathlib import Path

from diny import singleton
from pydantic import Field

from ...types.base import Frozen


@singleton
class BenchParams(Frozen):
    # Without a query file every lexicon word is looked up.
    queries: Path | None = None
    iterations: int = Field(default=5, ge=1)
    # Generate a lexicon of at least this many forms instead of loading one.
    synthetic: int | None = Field(default=None, ge=1)
    threads: int = Field(default=1, ge=1)
    unknown: int = Field(default=100, ge=0)
    seed: int = 0
