"""Frozen base model and the NFC string types shared by the value models."""

from typing import Annotated

from pydantic import AfterValidator, BaseModel, ConfigDict

from ..utils.greek import nfc


class Frozen(BaseModel):
    """Immutable base. Every value type in the system inherits from this."""

    model_config = ConfigDict(frozen=True)


# Text compared against lexicon or index keys, which are stored composed.
NfcStr = Annotated[str, AfterValidator(nfc)]
NfcStrs = tuple[NfcStr, ...]
