"""Shared fixtures and helpers for orthos tests."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

import orthos
from orthos.fsa import Mdag, build_mdag

DATA_DIR = Path(orthos.__file__).parent / "data"
GOLDEN_DIR = Path(__file__).parent / "golden"

# The six inflected forms whose TRIE and MDAG are compared in the docs.
ISOMETRY_WORDS = [
    "ισομετρία",
    "ισομετρίας",
    "ισομετρίες",
    "ισομοιρία",
    "ισομοιρίας",
    "ισομοιρίες",
]


def run_cli(*argv: str) -> None:
    """Set sys.argv and invoke cli().  Must run inside diny.provide()."""
    sys.argv = ["orthos", *argv]
    from orthos.cli._cli import cli

    cli()


def exit_code(*argv: str) -> int:
    """Run the CLI and return its exit status (0 when it returns normally)."""
    try:
        run_cli(*argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    return 0


@pytest.fixture(autouse=True)
def _isolate(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    # No test may pick up a developer's pyproject.toml or ORTHOS_CONFIG.
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("ORTHOS_CONFIG", raising=False)


@pytest.fixture
def isometry_words() -> list[str]:
    return list(ISOMETRY_WORDS)


@pytest.fixture
def isometry_mdag() -> Mdag:
    return build_mdag(ISOMETRY_WORDS)


@pytest.fixture
def isometry_file(tmp_path: Path) -> Path:
    path = tmp_path / "isometry.txt"
    path.write_text("".join(f"{w}\n" for w in ISOMETRY_WORDS), encoding="utf-8")
    return path


@pytest.fixture
def psyche_file(tmp_path: Path) -> Path:
    path = tmp_path / "psyche.txt"
    path.write_text("ΨΑΡΙ\nΨΥΧΕΙ\nΨΥΧΗ\nΨΥΧΟΙ\n", encoding="utf-8")
    return path
