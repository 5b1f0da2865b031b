"""Throughput and latency measurement for lexicon lookups and suggestions.

Pure functions, no DI.
"""

from __future__ import annotations

import statistics
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor

from ..fsa import Mdag


def lookup_rate(lexicon: Mdag, queries: Sequence[str]) -> float:
    """Lookups per second for one pass over `queries`."""
    contains = lexicon.contains
    start = time.perf_counter()
    for word in queries:
        contains(word)
    elapsed = time.perf_counter() - start
    return len(queries) / elapsed if elapsed > 0 else float("inf")


def median_lookup_rate(
    lexicon: Mdag,
    queries: Sequence[str],
    iterations: int,
    on_pass: Callable[[float], None] | None = None,
) -> float:
    rates: list[float] = []
    for _ in range(iterations):
        rate = lookup_rate(lexicon, queries)
        rates.append(rate)
        if on_pass is not None:
            on_pass(rate)
    return statistics.median(rates)


def threaded_lookup_rate(lexicon: Mdag, queries: Sequence[str], threads: int) -> float:
    """Aggregate lookups per second with every thread running the full query list.

    All threads share the one immutable automaton.
    """
    start = time.perf_counter()
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for _ in pool.map(lambda _: lookup_rate(lexicon, queries), range(threads)):
            pass
    elapsed = time.perf_counter() - start
    return threads * len(queries) / elapsed if elapsed > 0 else float("inf")


def latencies(fn: Callable[[str], object], words: Sequence[str]) -> list[float]:
    """Seconds taken by `fn` on each word, in input order."""
    out: list[float] = []
    for word in words:
        start = time.perf_counter()
        fn(word)
        out.append(time.perf_counter() - start)
    return out


def percentile(samples: Sequence[float], q: float) -> float:
    """Nearest-rank percentile, `q` in [0, 100]."""
    if not samples:
        msg = "Cannot take a percentile of no samples."
        raise ValueError(msg)
    ordered = sorted(samples)
    rank = max(1, -(-len(ordered) * q // 100))
    return ordered[min(len(ordered), int(rank)) - 1]
