"""Scoring orchestration: load corpora, score sessions in a pool, report."""

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Union

from tqdm import tqdm

from ..align import MAX_BRUTE_FORCE_SPEAKERS, score_session_record
from ..config import ScoringSettings
from ..corpus import load_corpus, pair_corpora
from ..models import (
    Algorithm,
    Corpus,
    ScoreReport,
    SessionPair,
    SessionScore,
    TooManySpeakers,
)
from ..report import build_report

logger = logging.getLogger(__name__)


def check_bruteforce_feasible(pairs: List[SessionPair]) -> None:
    """Reject enumeration up front rather than partway through a run."""
    too_large = [
        p.session_id
        for p in pairs
        if max(len(p.ref_streams), len(p.hyp_streams)) > MAX_BRUTE_FORCE_SPEAKERS
    ]
    if too_large:
        raise TooManySpeakers(
            f"bruteforce supports at most {MAX_BRUTE_FORCE_SPEAKERS} speakers per side; "
            f"{len(too_large)} session(s) exceed it, e.g. {too_large[0]!r}"
        )


def score_pairs(
    pairs: List[SessionPair],
    algorithm: Algorithm = Algorithm.HUNGARIAN,
    jobs: int = 1,
) -> List[SessionScore]:
    """Score sessions, in parallel when ``jobs > 1``; results sorted by session id."""
    algorithm = Algorithm(algorithm)
    if algorithm == Algorithm.BRUTEFORCE:
        check_bruteforce_feasible(pairs)

    ordered = sorted(pairs, key=lambda p: p.session_id)
    progress = dict(total=len(ordered), desc="Scoring", unit="session", disable=None, leave=False)

    if jobs <= 1 or len(ordered) <= 1:
        # A lone session still gets the cores, spent on its cost-matrix cells.
        workers = max(1, jobs)
        scores = [
            score_session_record(pair, algorithm=algorithm, workers=workers)
            for pair in tqdm(ordered, **progress)
        ]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(ordered))) as executor:
            results = executor.map(score_session_record, ordered, itertools.repeat(algorithm))
            scores = list(tqdm(results, **progress))

    logger.info(f"Scored {len(scores)} sessions with {algorithm.value} (jobs={jobs})")
    return sorted(scores, key=lambda s: s.session_id)


def score_against(
    settings: ScoringSettings, ref: Corpus, hyp_path: Union[str, Path]
) -> ScoreReport:
    """Score one hypothesis file against an already loaded reference."""
    hyp = load_corpus(hyp_path, settings.input_format, settings.normalization)
    pairs = pair_corpora(ref, hyp, require_overlap=True)
    scores = score_pairs(pairs, settings.algorithm, settings.jobs)
    return build_report(scores, settings.group_by_speakers)


def score_files(
    settings: ScoringSettings, ref_path: Union[str, Path], hyp_path: Union[str, Path]
) -> ScoreReport:
    """Full pipeline for one reference / hypothesis file pair."""
    ref = load_corpus(ref_path, settings.input_format, settings.normalization)
    return score_against(settings, ref, hyp_path)
