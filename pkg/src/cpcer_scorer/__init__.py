"""cpCER scoring toolkit for speaker-attributed speech transcription."""

__version__ = "0.1.0"

from .align import score_session
from .corpus import load_corpus, pair_corpora
from .models import NormalizationConfig, SessionPair, SpeakerStream
from .report import build_report, emit_report

__all__ = [
    "NormalizationConfig",
    "SessionPair",
    "SpeakerStream",
    "build_report",
    "emit_report",
    "load_corpus",
    "pair_corpora",
    "score_session",
    "__version__"
]
