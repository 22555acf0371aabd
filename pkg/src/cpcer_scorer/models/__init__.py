"""Data models for the scorer."""

from .exceptions import (
    ConfigError,
    CpcerError,
    EmptyReference,
    InvalidEncoding,
    NoOverlap,
    ParseError,
    ReportIoError,
    ScoringError,
    TooManySpeakers,
)
from .scoring_models import (
    Algorithm,
    AlignmentOutcome,
    Corpus,
    CostMatrix,
    EditDistanceResult,
    GroupReport,
    InputFormat,
    NormalizationConfig,
    ReportFormat,
    ScoreReport,
    Segment,
    SessionPair,
    SessionScore,
    SpeakerCountStats,
    SpeakerStream,
    TokenSequence,
    percent,
)

__all__ = [
    "Algorithm",
    "AlignmentOutcome",
    "Corpus",
    "CostMatrix",
    "EditDistanceResult",
    "GroupReport",
    "InputFormat",
    "NormalizationConfig",
    "ReportFormat",
    "ScoreReport",
    "Segment",
    "SessionPair",
    "SessionScore",
    "SpeakerCountStats",
    "SpeakerStream",
    "TokenSequence",
    "percent",
    "ConfigError",
    "CpcerError",
    "EmptyReference",
    "InvalidEncoding",
    "NoOverlap",
    "ParseError",
    "ReportIoError",
    "ScoringError",
    "TooManySpeakers",
]
