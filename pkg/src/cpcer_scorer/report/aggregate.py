"""Corpus-level aggregation of session scores."""

from fractions import Fraction
from typing import List

from ..models import GroupReport, ScoreReport, SessionScore, SpeakerCountStats, percent

ALL_GROUP = "all"


def _group(key: str, scores: List[SessionScore]) -> GroupReport:
    total_distance = sum(s.min_distance for s in scores)
    total_ref_tokens = sum(s.total_ref_tokens for s in scores)
    return GroupReport(
        key=key,
        session_count=len(scores),
        total_distance=total_distance,
        total_ref_tokens=total_ref_tokens,
        micro_cpcer=percent(total_distance, total_ref_tokens),
        macro_cpcer=sum((s.cpcer for s in scores), Fraction(0)) / len(scores),
    )


def aggregate(scores: List[SessionScore], group_by_speaker_count: bool = True) -> List[GroupReport]:
    """One group per oracle speaker count (ascending) when enabled, then 'all'.

    micro_cpcer pools distances and reference tokens over the group and is
    the headline figure; macro_cpcer is the plain mean of session values.
    """
    if not scores:
        return []
    groups = []
    if group_by_speaker_count:
        for count in sorted({s.oracle_speakers for s in scores}):
            groups.append(_group(str(count), [s for s in scores if s.oracle_speakers == count]))
    groups.append(_group(ALL_GROUP, scores))
    return groups


def speaker_counting_stats(scores: List[SessionScore]) -> SpeakerCountStats:
    """How often the estimated speaker number under/matches/overshoots the oracle."""
    return SpeakerCountStats(
        under=sum(1 for s in scores if s.estimated_speakers < s.oracle_speakers),
        equal=sum(1 for s in scores if s.estimated_speakers == s.oracle_speakers),
        over=sum(1 for s in scores if s.estimated_speakers > s.oracle_speakers),
    )


def build_report(scores: List[SessionScore], group_by_speaker_count: bool = True) -> ScoreReport:
    """Sessions sorted by id, their group aggregates and speaker counting."""
    ordered = sorted(scores, key=lambda s: s.session_id)
    return ScoreReport(
        sessions=ordered,
        groups=aggregate(ordered, group_by_speaker_count),
        speaker_counting=speaker_counting_stats(ordered) if ordered else None,
    )
