"""orthos bench: lookup throughput and suggestion latency on one lexicon."""

from __future__ import annotations

import os
import platform
from collections.abc import Callable
from contextlib import nullcontext

from diny import inject

from .. import ui
from ..dependencies.config.config import Config
from ..dependencies.params.bench_params import BenchParams
from ..dependencies.resources.lexicon import load_lexicon
from ..fsa import Mdag, automaton_stats, build_mdag, prepare_words, read_wordlist, source_size
from ..spelling.classes import default_class_table, load_class_table
from ..spelling.suggest import Speller
from ..utils.synthetic import synthetic_lexicon, unknown_words
from ..utils.timing import latencies, median_lookup_rate, percentile, threaded_lookup_rate

PERCENTILES = (50, 90, 99)


def _lexicon(params: BenchParams, config: Config) -> tuple[str, Mdag]:
    if params.synthetic is not None:
        words = synthetic_lexicon(params.synthetic, seed=params.seed)
        return f"synthetic ({params.synthetic}, seed {params.seed})", build_mdag(words)
    path = config.require("lexicon", "--lexicon")
    return str(path), load_lexicon(path)


@inject
def cmd_bench(params: BenchParams, config: Config) -> None:
    label, lexicon = _lexicon(params, config)
    words = lexicon.words()
    queries = prepare_words(read_wordlist(params.queries)) if params.queries else words
    if not queries:
        msg = "Nothing to look up: the lexicon and query list are empty."
        raise ValueError(msg)
    table = (
        load_class_table(config.require("classes", "--classes"))
        if config.classes
        else default_class_table()
    )
    speller = Speller.create(lexicon, table, combined_cap=config.combined_cap)
    unknown = unknown_words(words, params.unknown, seed=params.seed) if params.unknown else []

    stats = automaton_stats(lexicon)
    raw = source_size(words)
    report: dict[str, str] = {
        "platform": platform.platform(),
        "processor": platform.processor() or platform.machine(),
        "python": platform.python_version(),
        "cpu_count": str(os.cpu_count() or 0),
        "lexicon": label,
        "forms": str(len(words)),
        "bytes": str(stats.bytes),
        "source_bytes": str(raw),
        "ratio": f"{stats.bytes / raw:.4f}" if raw else "n/a",
        "queries": str(len(queries)),
        "iterations": str(params.iterations),
        "threads": str(params.threads),
    }

    with nullcontext() if config.tsv else ui.progress_lines() as p:

        def tick(task: str, total: int) -> Callable[..., None]:
            if p is None:
                return lambda *_: None
            task_id = p.add_task(task, total=total)
            return lambda *_: p.advance(task_id)

        rate = median_lookup_rate(
            lexicon, queries, params.iterations, on_pass=tick("lookups", params.iterations)
        )
        aggregate = (
            threaded_lookup_rate(lexicon, queries, params.threads) if params.threads > 1 else rate
        )
        advance = tick("suggestions", len(unknown))

        def timed_suggest(word: str) -> object:
            result = speller.suggest(word, config.limit)
            advance()
            return result

        samples = latencies(timed_suggest, unknown)

    report["lookups_per_second"] = f"{rate:.0f}"
    report["aggregate_lookups_per_second"] = f"{aggregate:.0f}"
    report["unknown_words"] = str(len(unknown))
    if samples:
        for q in PERCENTILES:
            report[f"suggest_p{q}_ms"] = f"{percentile(samples, q) * 1e3:.2f}"
        report["suggest_max_ms"] = f"{max(samples) * 1e3:.2f}"

    if config.tsv:
        for key, value in report.items():
            print(f"{key}\t{value}")
        return
    ui.console.print()
    ui.section("Benchmark")
    ui.kv(report)
