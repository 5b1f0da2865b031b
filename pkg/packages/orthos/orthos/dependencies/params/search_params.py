"""SearchParams: the grapheme pattern of `orthos search`."""

from diny import singleton

from ...types.base import Frozen


@singleton
class SearchParams(Frozen):
    pattern: str = ""
