"""Session-level cpCER: padding, cost matrix, permutation search."""

import logging
from typing import Iterable, List, Set

from ..editdist import pairwise_distances
from ..models import (
    Algorithm,
    AlignmentOutcome,
    CostMatrix,
    EmptyReference,
    SessionPair,
    SessionScore,
    SpeakerStream,
)
from ..utils import timing_decorator
from .assignment import brute_force_assignment, min_assignment

logger = logging.getLogger(__name__)


def _blank_streams(taken: Set[str], count: int) -> List[SpeakerStream]:
    """Empty streams with labels that cannot clash with real speakers."""
    blanks: List[SpeakerStream] = []
    k = 0
    while len(blanks) < count:
        k += 1
        speaker_id = f"<blank-{k}>"
        if speaker_id not in taken:
            blanks.append(SpeakerStream(speaker_id=speaker_id, is_padding=True))
    return blanks


def _ids(streams: Iterable[SpeakerStream]) -> Set[str]:
    return {s.speaker_id for s in streams}


def pad_to_equal(pair: SessionPair) -> SessionPair:
    """Append blank speakers to the smaller side so both sides have max(S, Ŝ)."""
    size = max(len(pair.ref_streams), len(pair.hyp_streams))
    ref_missing = size - len(pair.ref_streams)
    hyp_missing = size - len(pair.hyp_streams)
    if not ref_missing and not hyp_missing:
        return pair
    return SessionPair(
        session_id=pair.session_id,
        ref_streams=[*pair.ref_streams, *_blank_streams(_ids(pair.ref_streams), ref_missing)],
        hyp_streams=[*pair.hyp_streams, *_blank_streams(_ids(pair.hyp_streams), hyp_missing)],
    )


@timing_decorator("build_cost_matrix")
def build_cost_matrix(pair: SessionPair, workers: int = 1) -> CostMatrix:
    """cell[i][j] = edit distance between padded Y[i] and H[j]."""
    if len(pair.ref_streams) != len(pair.hyp_streams):
        raise ValueError(
            f"session {pair.session_id!r} is not padded: "
            f"{len(pair.ref_streams)} reference vs {len(pair.hyp_streams)} hypothesis speakers"
        )
    cells = pairwise_distances(
        [s.tokens for s in pair.ref_streams],
        [s.tokens for s in pair.hyp_streams],
        workers=workers,
    )
    return CostMatrix(cells=cells.tolist())


@timing_decorator("score_session")
def score_session(
    pair: SessionPair,
    algorithm: Algorithm = Algorithm.HUNGARIAN,
    workers: int = 1,
) -> AlignmentOutcome:
    """cpCER of one session over the padded, minimum-cost speaker permutation.

    The returned permutation indexes the padded streams (see ``pad_to_equal``).
    """
    total_ref_tokens = pair.total_ref_tokens
    if total_ref_tokens == 0 and any(s.length for s in pair.hyp_streams):
        raise EmptyReference(
            f"session {pair.session_id!r}: reference is empty but the hypothesis is not"
        )

    padded = pad_to_equal(pair)
    matrix = build_cost_matrix(padded, workers=workers)
    solve = brute_force_assignment if algorithm == Algorithm.BRUTEFORCE else min_assignment
    permutation, min_distance = solve(matrix)

    logger.debug(
        f"Session {pair.session_id}: S={pair.oracle_speakers} Ŝ={pair.estimated_speakers} "
        f"distance={min_distance} tokens={total_ref_tokens}"
    )
    return AlignmentOutcome(
        permutation=permutation,
        min_distance=min_distance,
        total_ref_tokens=total_ref_tokens,
    )


def score_session_record(
    pair: SessionPair,
    algorithm: Algorithm = Algorithm.HUNGARIAN,
    workers: int = 1,
) -> SessionScore:
    """Score a session and label the permutation with speaker ids."""
    outcome = score_session(pair, algorithm=algorithm, workers=workers)
    padded = pad_to_equal(pair)
    mapping = []
    for i, j in enumerate(outcome.permutation):
        ref, hyp = padded.ref_streams[i], padded.hyp_streams[j]
        mapping.append(
            (
                None if ref.is_padding else ref.speaker_id,
                None if hyp.is_padding else hyp.speaker_id,
            )
        )
    return SessionScore(
        session_id=pair.session_id,
        oracle_speakers=pair.oracle_speakers,
        estimated_speakers=pair.estimated_speakers,
        min_distance=outcome.min_distance,
        total_ref_tokens=outcome.total_ref_tokens,
        permutation=mapping,
    )
