"""orthos spell: report unknown words and suggest corrections."""

from __future__ import annotations

import bisect
import sys
from pathlib import Path

from diny import inject

from .. import ui
from ..dependencies.config.config import Config, ConfigError
from ..dependencies.params.parsed_args import ParsedArgs
from ..dependencies.params.spell_params import SpellParams
from ..dependencies.resources.speller import SpellChecker
from ..spelling.suggest import classify_error
from ..utils.greek import nfc

STDIN = Path("-")


@inject
def cmd_spell(args: ParsedArgs) -> None:
    match args.subcommand:
        case "check":
            cmd_check()
        case "suggest":
            cmd_suggest()


def _read(path: Path) -> tuple[str, str]:
    if path == STDIN:
        return "<stdin>", sys.stdin.read()
    return str(path), path.read_text(encoding="utf-8")


def _line_starts(text: str) -> list[int]:
    starts = [0]
    starts.extend(i + 1 for i, ch in enumerate(text) if ch == "\n")
    return starts


@inject
def cmd_check(params: SpellParams, checker: SpellChecker, config: Config) -> None:
    """One line per unknown word: `path:line:col: word`, 1-based."""
    found = 0
    for path in params.files or (STDIN,):
        name, text = _read(path)
        text = nfc(text)
        starts = _line_starts(text)
        for report in checker.speller.check(text):
            if report.known:
                continue
            found += 1
            line = bisect.bisect_right(starts, report.offset)
            col = report.offset - starts[line - 1] + 1
            if config.tsv:
                print(f"{name}\t{line}\t{col}\t{report.token}")
            else:
                print(f"{name}:{line}:{col}: {report.token}")
    if found:
        sys.exit(1)


@inject
def cmd_suggest(params: SpellParams, checker: SpellChecker, config: Config) -> None:
    if not params.words:
        raise ConfigError("command line", "no words given", fix="pass words after the lexicon")
    speller = checker.speller
    unknown = 0
    for raw in params.words:
        word = nfc(raw)
        if speller.contains(word):
            if not config.tsv:
                print(f"{word}: ok")
            continue
        unknown += 1
        suggestions = speller.suggest(word, config.limit, max_distance=config.max_distance)
        if config.tsv:
            for s in suggestions:
                print(s.tsv())
            continue
        if params.why and suggestions:
            ui.section(word)
            rows = [
                [
                    f"[orthos.value]{ui.escape(s.word)}[/]",
                    str(s.distance),
                    s.source.value,
                    classify_error(word, s.word, speller.table).value,
                ]
                for s in suggestions
            ]
            ui.print_table(["suggestion", "distance", "source", "likely error"], rows)
            ui.console.print()
            continue
        listed = ", ".join(f"{s.word} ({s.distance})" for s in suggestions) or "-"
        print(f"{word}: {listed}")
    if unknown:
        sys.exit(1)
