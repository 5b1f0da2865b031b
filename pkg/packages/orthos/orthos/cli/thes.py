"""orthos thes: look up alternatives, check closure, count lemmas."""

from __future__ import annotations

import sys

from diny import inject

from .. import ui
from ..dependencies.config.config import Config, ConfigError
from ..dependencies.params.parsed_args import ParsedArgs
from ..dependencies.params.thes_params import ThesParams
from ..dependencies.resources.thesaurus import LoadedThesaurus
from ..thesaurus import closure_findings, suggest_alternatives, thesaurus_stats


@inject
def cmd_thes(args: ParsedArgs) -> None:
    match args.subcommand:
        case "lookup":
            cmd_lookup()
        case "check":
            cmd_check()
        case "stats":
            cmd_stats()


@inject
def cmd_lookup(params: ThesParams, loaded: LoadedThesaurus, config: Config) -> None:
    if not params.words:
        raise ConfigError(
            "command line", "no words given", fix="pass word forms after the thesaurus"
        )
    missing = 0
    for word in params.words:
        found = suggest_alternatives(loaded.thesaurus, word)
        if not found:
            missing += 1
            if not config.tsv:
                ui.console.print(f"{ui.badge_markup('unknown')} {ui.escape(word)}")
            continue
        if config.tsv:
            for alt in found:
                print(
                    f"{word}\t{alt.lemma_id}\t{alt.headword}\t{alt.meaning}\t"
                    f"{','.join(alt.synonyms)}\t{','.join(alt.antonyms)}\t"
                    f"{','.join(alt.related)}"
                )
            continue
        for alt in found:
            ui.section(f"{alt.headword} ({alt.meaning})", labels=(*alt.style, *alt.domain))
            examples = {f"example {n}": text for n, text in enumerate(alt.examples, start=1)}
            ui.kv(
                {
                    "synonyms": alt.synonyms or "-",
                    "antonyms": alt.antonyms,
                    "related": alt.related,
                    **examples,
                }
            )
            ui.console.print()
    if missing:
        sys.exit(1)


@inject
def cmd_check(loaded: LoadedThesaurus, config: Config) -> None:
    findings = closure_findings(loaded.thesaurus)
    violations = sum(f.is_violation for f in findings)
    rows = [
        [
            ui.badge_markup("violation" if f.is_violation else "note"),
            str(f.lemma_id),
            ui.escape(f.headword),
            str(f.meaning),
            f.relation.value,
            f"[orthos.value]{ui.escape(f.word)}[/]",
        ]
        for f in findings
    ]
    if config.tsv:
        ui.print_table([], rows, tsv=True)
    elif rows:
        ui.section("Closure")
        ui.print_table(["status", "id", "lemma", "meaning", "relation", "word"], rows)
        ui.console.print()
    if violations:
        if not config.tsv:
            ui.hint(f"{violations} synonym or antonym entries name no lemma.")
        sys.exit(1)
    if not config.tsv:
        ui.hint(f"Closed: every synonym and antonym of {loaded.path} resolves.")


@inject
def cmd_stats(loaded: LoadedThesaurus) -> None:
    stats = thesaurus_stats(loaded.thesaurus)
    print(stats.line())
    print(f"index {stats.index.line()}")
