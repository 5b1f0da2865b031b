"""LoadedThesaurus: the thesaurus file named by the config or `--thesaurus`."""

from __future__ import annotations

from pathlib import Path

from diny import provider, singleton

from ...thesaurus import Thesaurus, load
from ...types.base import Frozen
from ..config.config import Config


@singleton
class LoadedThesaurus(Frozen):
    path: Path
    thesaurus: Thesaurus


@provider(LoadedThesaurus)
def provide_loaded_thesaurus(config: Config) -> LoadedThesaurus:
    path = config.require("thesaurus", "--thesaurus")
    return LoadedThesaurus(path=path, thesaurus=load(path))
