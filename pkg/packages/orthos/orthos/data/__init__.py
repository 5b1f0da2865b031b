"""Bundled sample data: class table, lexicon, corpus, homographs, thesaurus."""

from pathlib import Path

DATA_DIR = Path(__file__).parent


def data_file(name: str) -> Path:
    return DATA_DIR / name
