"""Hyphenator and HomographList: the hyphenation model and its homographs."""

from __future__ import annotations

from pathlib import Path

from diny import provider, singleton
from pydantic import Field

from ...data import data_file
from ...hyphenation import HyphenationModel, load_model, read_corpus
from ...types.base import Frozen
from ..config.config import Config


@singleton
class Hyphenator(Frozen):
    """The configured model, or an untrained one (rules only) when none is set."""

    path: Path | None = None
    model: HyphenationModel = Field(default_factory=HyphenationModel)


@provider(Hyphenator)
def provide_hyphenator(config: Config) -> Hyphenator:
    if config.model is None:
        return Hyphenator()
    path = config.require("model", "--model")
    return Hyphenator(path=path, model=load_model(path))


@singleton
class HomographList(Frozen):
    """Heterophonic homographs, kept unsplit by the exception list."""

    path: Path = Field(default_factory=lambda: data_file("homographs.txt"))
    words: tuple[str, ...] = ()


@provider(HomographList)
def provide_homograph_list(config: Config) -> HomographList:
    path = data_file("homographs.txt")
    if config.homographs is not None:
        path = config.require("homographs", "--homographs")
    return HomographList(path=path, words=tuple(form.word for form in read_corpus(path)))
