"""Aggregation and serialization of cpCER results."""

from .aggregate import ALL_GROUP, aggregate, build_report, speaker_counting_stats
from .writers import (
    ReportDocument,
    emit_comparison,
    emit_report,
    format_fixed,
    round_half_up,
    to_document,
)

__all__ = [
    "ALL_GROUP",
    "ReportDocument",
    "aggregate",
    "build_report",
    "emit_comparison",
    "emit_report",
    "format_fixed",
    "round_half_up",
    "speaker_counting_stats",
    "to_document",
]
