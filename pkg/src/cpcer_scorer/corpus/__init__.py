"""Transcript parsing and per-speaker stream assembly."""

from .parsers import (
    JSON_KEYS,
    PARSERS,
    TSV_HEADER,
    parse_segments_json,
    parse_segments_text,
    parse_segments_tsv,
    write_segments_tsv,
)
from .streams import (
    build_corpus,
    concatenate_speakers,
    deduplicate,
    load_corpus,
    pair_corpora,
)

__all__ = [
    "JSON_KEYS",
    "PARSERS",
    "TSV_HEADER",
    "build_corpus",
    "concatenate_speakers",
    "deduplicate",
    "load_corpus",
    "pair_corpora",
    "parse_segments_json",
    "parse_segments_text",
    "parse_segments_tsv",
    "write_segments_tsv",
]
