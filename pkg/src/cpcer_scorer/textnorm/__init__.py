"""Transcript text normalization."""

from .normalizer import DEFAULT_CONFIG, normalize, normalize_and_tokenize, tokenize

__all__ = [
    "DEFAULT_CONFIG",
    "normalize",
    "normalize_and_tokenize",
    "tokenize",
]
