"""Text normalization and character tokenization for CER scoring."""

import functools
import unicodedata
from typing import Union

from ..models import InvalidEncoding, NormalizationConfig, TokenSequence

# Each pass can only shrink or recompose the text, so a few passes suffice.
_MAX_PASSES = 4

DEFAULT_CONFIG = NormalizationConfig()


def _decode(text: Union[str, bytes]) -> str:
    if isinstance(text, (bytes, bytearray)):
        try:
            return bytes(text).decode("utf-8")
        except UnicodeDecodeError as e:
            raise InvalidEncoding(f"invalid UTF-8 at byte {e.start}: {e.reason}") from e
    try:
        text.encode("utf-8")
    except UnicodeEncodeError as e:
        raise InvalidEncoding(f"lone surrogate at position {e.start}") from e
    return text


@functools.lru_cache(maxsize=4096)
def _is_latin(ch: str) -> bool:
    return "LATIN" in unicodedata.name(ch, "")


def _fold_latin(text: str) -> str:
    return "".join(ch.lower() if _is_latin(ch) else ch for ch in text)


def _single_pass(text: str, cfg: NormalizationConfig) -> str:
    if cfg.apply_compatibility_normalization:
        text = unicodedata.normalize("NFKC", text)
    if cfg.case_fold_latin:
        text = _fold_latin(text)
    if cfg.strip_whitespace:
        text = "".join(ch for ch in text if not ch.isspace())
    if cfg.strip_punctuation:
        text = "".join(ch for ch in text if not unicodedata.category(ch).startswith("P"))
    return text


def normalize(text: Union[str, bytes], cfg: NormalizationConfig = DEFAULT_CONFIG) -> str:
    """Canonicalize transcript text.

    Applies, in order: NFKC, Latin case folding, whitespace removal and
    punctuation removal, each only when enabled in ``cfg``. The steps are
    repeated until the text is stable, which keeps the function idempotent
    when a removal brings a base character next to a combining mark.
    """
    text = _decode(text)
    for _ in range(_MAX_PASSES):
        normalized = _single_pass(text, cfg)
        if normalized == text:
            break
        text = normalized
    return text


def tokenize(text: str) -> TokenSequence:
    """One token per Unicode scalar value, in order."""
    return TokenSequence.model_construct(tokens=tuple(text))


def normalize_and_tokenize(
    text: Union[str, bytes], cfg: NormalizationConfig = DEFAULT_CONFIG
) -> TokenSequence:
    return tokenize(normalize(text, cfg))
