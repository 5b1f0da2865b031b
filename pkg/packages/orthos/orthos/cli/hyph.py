"""orthos hyph: hyphenate words, train trees, build exceptions, corpus stats."""

from __future__ import annotations

import sys
import time
from pathlib import Path

from diny import inject

from .. import ui
from ..dependencies.config.config import Config, ConfigError
from ..dependencies.params.hyph_params import HyphParams
from ..dependencies.params.parsed_args import ParsedArgs
from ..dependencies.resources.hyphenator import HomographList, Hyphenator
from ..hyphenation import (
    HyphenationModel,
    ambiguity_stats,
    build_exceptions,
    hyphenate,
    load_model,
    read_corpus,
    save_model,
    train_trees,
)
from ..spelling.text import tokenize
from ..types.hyphenation import HyphenatedForm, HyphenationSource


@inject
def cmd_hyph(args: ParsedArgs) -> None:
    match args.subcommand:
        case "split":
            cmd_split()
        case "train":
            cmd_train()
        case "exceptions":
            cmd_exceptions()
        case "stats":
            cmd_corpus_stats()


def _corpus(params: HyphParams) -> list[HyphenatedForm]:
    if params.corpus is None:
        raise ConfigError("command line", "no corpus given")
    return read_corpus(params.corpus)


def _split_words(operands: tuple[str, ...], extra_letters: str) -> list[str]:
    """Operands naming a file contribute the words of its text."""
    words: list[str] = []
    for operand in operands:
        path = Path(operand)
        if path.is_file():
            text = path.read_text(encoding="utf-8")
            words.extend(token for token, _ in tokenize(text, extra_letters))
        else:
            words.append(operand)
    return words


@inject
def cmd_split(params: HyphParams, hyphenator: Hyphenator, config: Config) -> None:
    failed = 0
    for word in _split_words(params.words, config.extra_letters):
        h = hyphenate(word, hyphenator.model)
        if h.source is HyphenationSource.UNSYLLABIFIABLE:
            failed += 1
        if config.tsv:
            print(f"{h.word}\t{h}\t{h.source.value}")
        else:
            print(h)
    if failed:
        sys.exit(1)


@inject
def cmd_train(params: HyphParams, config: Config) -> None:
    corpus = _corpus(params)
    if params.out is None:
        raise ConfigError("command line", "no output path given", fix="pass -o PATH")
    start = time.perf_counter()
    with ui.spinner(f"Training on {len(corpus)} forms"):
        trees = train_trees(corpus, min_patterns=config.min_patterns)
        model = HyphenationModel(trees=trees, min_patterns=config.min_patterns)
        save_model(model, params.out)
    ui.spinner_done(f"Wrote {ui.escape(str(params.out))}", (time.perf_counter() - start) * 1e3)

    rows = [
        [pair, str(t.patterns), str(t.errors), str(t.leaves), str(t.depth)]
        for pair, t in trees.items()
    ]
    if config.tsv:
        ui.print_table([], rows, tsv=True)
        return
    ui.console.print()
    ui.section("Trees")
    ui.print_table(["pair", "patterns", "errors", "leaves", "depth"], rows)
    ui.console.print()
    ui.hint(
        "Add the forms the trees miss with",
        ["orthos", "hyph", "exceptions", str(params.corpus), str(params.out)],
    )


@inject
def cmd_exceptions(params: HyphParams, homographs: HomographList, config: Config) -> None:
    corpus = _corpus(params)
    path = config.require("model", "--model")
    model = load_model(path)
    exceptions = build_exceptions(corpus, model, homographs.words)
    out = params.out or path
    save_model(model.model_copy(update={"exceptions": exceptions}), out)
    if config.tsv:
        print(f"exceptions\t{len(exceptions.entries)}")
        return
    ui.spinner_done(f"Wrote {ui.escape(str(out))}")
    ui.kv(
        {
            "corpus forms": str(len(corpus)),
            "homographs": str(len(homographs.words)),
            "exceptions": str(len(exceptions.entries)),
        }
    )


@inject
def cmd_corpus_stats(params: HyphParams, config: Config) -> None:
    report = ambiguity_stats(_corpus(params))
    rows = [
        [b.bigram, str(b.count), f"{b.split_percent:.1f}", f"{b.non_split_percent:.1f}"]
        for b in report.bigrams
    ]
    total = [
        "total",
        str(report.occurrences),
        f"{report.split_percent:.1f}",
        f"{report.non_split_percent:.1f}",
    ]
    if config.tsv:
        ui.print_table([], [*rows, total], tsv=True)
        print(f"forms\t{report.forms}\t{report.ambiguous_forms}\t{report.ambiguous_fraction:.1f}")
        return
    ui.section("Ambiguous pairs")
    ui.print_table(["pair", "count", "split %", "non-split %"], [*rows, total])
    ui.console.print()
    ui.kv(
        {
            "forms": str(report.forms),
            "with an ambiguous pair": f"{report.ambiguous_forms} ({report.ambiguous_fraction:.1f}%)",
        }
    )
