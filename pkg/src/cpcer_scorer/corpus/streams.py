"""Corpus assembly: deduplication, speaker concatenation, session pairing."""

import itertools
import logging
from pathlib import Path
from typing import Dict, List, Set, Tuple, Union

from ..models import (
    Corpus,
    InputFormat,
    NoOverlap,
    NormalizationConfig,
    ParseError,
    Segment,
    SessionPair,
    SpeakerStream,
    TokenSequence,
)
from ..textnorm import DEFAULT_CONFIG, normalize_and_tokenize
from .parsers import PARSERS

logger = logging.getLogger(__name__)


def deduplicate(segments: List[Segment]) -> List[Segment]:
    """Drop exact repeats of a (session, speaker, start, end, text) record."""
    seen: Set[Tuple[str, str, int, int, str]] = set()
    unique: List[Segment] = []
    for seg in segments:
        if seg.record_key in seen:
            logger.warning(
                f"Dropping duplicate segment {seg.session_id}/{seg.speaker_id} "
                f"[{seg.start}, {seg.end}]"
            )
            continue
        seen.add(seg.record_key)
        unique.append(seg)
    return unique


def concatenate_speakers(
    segments: List[Segment], cfg: NormalizationConfig = DEFAULT_CONFIG
) -> Dict[str, List[SpeakerStream]]:
    """Per session, one stream per speaker in order of first appearance.

    A speaker's segments are stably sorted by (start, end) so equal times
    keep file order, then normalized, tokenized and joined without separator.
    """
    grouped: Dict[str, Dict[str, List[Tuple[int, Segment]]]] = {}
    for index, seg in enumerate(segments):
        grouped.setdefault(seg.session_id, {}).setdefault(seg.speaker_id, []).append((index, seg))

    sessions: Dict[str, List[SpeakerStream]] = {}
    for session_id, speakers in grouped.items():
        streams = []
        for speaker_id, items in speakers.items():
            ordered = sorted(items, key=lambda item: (item[1].start, item[1].end, item[0]))
            tokens = tuple(
                itertools.chain.from_iterable(
                    normalize_and_tokenize(seg.text, cfg).tokens for _, seg in ordered
                )
            )
            streams.append(
                SpeakerStream(
                    speaker_id=speaker_id,
                    tokens=TokenSequence.model_construct(tokens=tokens),
                    source_segment_count=len(items),
                )
            )
        sessions[session_id] = streams
    return sessions


def build_corpus(
    segments: List[Segment],
    cfg: NormalizationConfig = DEFAULT_CONFIG,
    source: str = "<bytes>",
    input_format: InputFormat = InputFormat.TSV,
) -> Corpus:
    unique = deduplicate(segments)
    return Corpus(
        source=source,
        input_format=input_format,
        normalization=cfg,
        segments=unique,
        sessions=concatenate_speakers(unique, cfg),
    )


def load_corpus(
    path: Union[str, Path],
    input_format: InputFormat = InputFormat.TSV,
    cfg: NormalizationConfig = DEFAULT_CONFIG,
) -> Corpus:
    """Read and parse a transcript file into a corpus."""
    source = str(path)
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise ParseError(f"cannot read file: {e.strerror or e}", source) from e
    input_format = InputFormat(input_format)
    segments = PARSERS[input_format](data, source=source)
    logger.info(f"Parsed {len(segments)} segments from {source}")
    return build_corpus(segments, cfg, source=source, input_format=input_format)


def pair_corpora(ref: Corpus, hyp: Corpus, require_overlap: bool = False) -> List[SessionPair]:
    """Match sessions by id, ordered by session id.

    Reference sessions without a hypothesis get an empty hypothesis side.
    Hypothesis-only sessions are logged and left out. With
    ``require_overlap``, a non-empty hypothesis that shares no session with
    a non-empty reference raises ``NoOverlap``.
    """
    shared = ref.sessions.keys() & hyp.sessions.keys()
    if require_overlap and ref.sessions and hyp.sessions and not shared:
        raise NoOverlap(f"{ref.source} and {hyp.source} share no session id")

    for session_id in sorted(hyp.sessions.keys() - ref.sessions.keys()):
        logger.warning(f"Hypothesis session {session_id!r} is not in the reference; skipped")

    pairs = []
    for session_id in sorted(ref.sessions):
        hyp_streams = hyp.sessions.get(session_id)
        if hyp_streams is None:
            logger.warning(
                f"Session {session_id!r} has no hypothesis; scored as all deletions"
            )
        pairs.append(
            SessionPair(
                session_id=session_id,
                ref_streams=ref.sessions[session_id],
                hyp_streams=hyp_streams or [],
            )
        )
    return pairs
