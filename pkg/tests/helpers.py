"""Builders shared by the test modules."""

import random
from typing import Dict, List

from cpcer_scorer.models import SessionPair, SessionScore, SpeakerStream
from cpcer_scorer.textnorm import tokenize

CJK = "你好我们的是在有人会议今天讨论"
MIXED_ALPHABET = "abcdxyz019" + CJK


def stream(speaker_id: str, text: str) -> SpeakerStream:
    return SpeakerStream(speaker_id=speaker_id, tokens=tokenize(text), source_segment_count=1)


def make_pair(ref: Dict[str, str], hyp: Dict[str, str], session_id: str = "S1") -> SessionPair:
    return SessionPair(
        session_id=session_id,
        ref_streams=[stream(k, v) for k, v in ref.items()],
        hyp_streams=[stream(k, v) for k, v in hyp.items()],
    )


def session_score(
    session_id: str,
    distance: int,
    tokens: int,
    oracle: int = 2,
    estimated: int = 2,
) -> SessionScore:
    return SessionScore(
        session_id=session_id,
        oracle_speakers=oracle,
        estimated_speakers=estimated,
        min_distance=distance,
        total_ref_tokens=tokens,
    )


def random_text(rng: random.Random, max_length: int, alphabet: str = MIXED_ALPHABET) -> str:
    return "".join(rng.choices(alphabet, k=rng.randint(0, max_length)))


def tsv(rows: List[tuple]) -> str:
    return "".join("\t".join(str(field) for field in row) + "\n" for row in rows)


# M01: labels swapped, one substitution. M02: two speakers merged into one.
# M03: one substitution plus a spurious speaker.
REFERENCE_ROWS = [
    ("M01", "A", 0, 1000, "今天我们讨论预算"),
    ("M01", "B", 1100, 2000, "好的我先说"),
    ("M01", "A", 2100, 3000, "请开始"),
    ("M02", "C", 0, 800, "会议开始"),
    ("M02", "D", 900, 1500, "大家好"),
    ("M02", "E", 1600, 2400, "我是主持人"),
    ("M03", "A", 0, 700, "abcd"),
]

HYPOTHESIS_ROWS = [
    ("M01", "spk2", 0, 1000, "今天我们讨论预算"),
    ("M01", "spk1", 1100, 2000, "好的我先讲"),
    ("M01", "spk2", 2100, 3000, "请开始"),
    ("M02", "x", 0, 800, "会议开始"),
    ("M02", "y", 900, 2400, "大家好我是主持人"),
    ("M03", "1", 0, 700, "abxd"),
    ("M03", "2", 800, 900, "q"),
]
