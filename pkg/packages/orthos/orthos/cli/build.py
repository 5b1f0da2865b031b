"""orthos build: compile a word list into an MDAG or TRIE file."""

from __future__ import annotations

import time

from diny import inject

from .. import ui
from ..dependencies.params.build_params import AutomatonKind, BuildParams
from ..fsa import (
    automaton_stats,
    build_mdag,
    build_trie,
    prepare_words,
    read_wordlist,
    serialize,
    source_size,
)


@inject
def cmd_build(params: BuildParams) -> None:
    words = prepare_words(read_wordlist(params.wordlist))
    start = time.perf_counter()
    with ui.spinner(f"Compiling {len(words)} words into a {params.kind.value.upper()}"):
        if params.kind is AutomatonKind.TRIE:
            automaton = build_trie((w, rank) for rank, w in enumerate(words, start=1))
        else:
            automaton = build_mdag(words)
        data = serialize(automaton)
    params.out.write_bytes(data)
    ui.spinner_done(f"Wrote {ui.escape(str(params.out))}", (time.perf_counter() - start) * 1e3)

    stats = automaton_stats(automaton)
    raw = source_size(words)
    ratio = f"{stats.bytes / raw:.4f}" if raw else "n/a"
    print(stats.line())
    print(f"source_bytes={raw} ratio={ratio}")
