"""ThesParams: the word forms queried by `orthos thes lookup`."""

from diny import singleton

from ...types.base import Frozen


@singleton
class ThesParams(Frozen):
    words: tuple[str, ...] = ()
