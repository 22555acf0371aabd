"""Core scoring data models."""

from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    StrictInt,
    StrictStr,
    field_validator,
    model_validator,
)


class InputFormat(str, Enum):
    """Transcript file formats."""
    TSV = "tsv"
    JSON = "json"
    TEXT = "text"


class ReportFormat(str, Enum):
    """Report serializations."""
    JSON = "json"
    TSV = "tsv"
    PRETTY = "pretty"


class Algorithm(str, Enum):
    """Speaker permutation search strategies."""
    HUNGARIAN = "hungarian"
    BRUTEFORCE = "bruteforce"


def percent(numerator: int, denominator: int) -> Fraction:
    """Exact percentage; an empty denominator counts as 0%."""
    if denominator == 0:
        return Fraction(0)
    return Fraction(numerator * 100, denominator)


class NormalizationConfig(BaseModel):
    """Text normalization switches applied before tokenization."""
    model_config = ConfigDict(frozen=True)

    apply_compatibility_normalization: bool = Field(
        default=True, description="Apply Unicode NFKC so full-width forms match half-width"
    )
    strip_whitespace: bool = Field(default=True, description="Remove all whitespace")
    strip_punctuation: bool = Field(
        default=False, description="Remove Unicode punctuation (category P*)"
    )
    case_fold_latin: bool = Field(default=False, description="Lower-case Latin letters")


class TokenSequence(BaseModel):
    """Ordered character tokens, one per Unicode scalar value."""
    model_config = ConfigDict(frozen=True)

    tokens: Tuple[str, ...] = Field(default=(), description="One scalar value per token")

    @property
    def length(self) -> int:
        return len(self.tokens)

    @property
    def text(self) -> str:
        return "".join(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def __add__(self, other: "TokenSequence") -> "TokenSequence":
        return TokenSequence.model_construct(tokens=self.tokens + other.tokens)


class EditDistanceResult(BaseModel):
    """Levenshtein distance between a reference and a hypothesis sequence."""
    model_config = ConfigDict(frozen=True)

    distance: int = Field(..., ge=0, description="Unit-cost token edits")
    ref_length: int = Field(..., ge=0, description="Reference tokens")
    hyp_length: int = Field(..., ge=0, description="Hypothesis tokens")

    @model_validator(mode="after")
    def _check_bounds(self) -> "EditDistanceResult":
        if not (
            abs(self.ref_length - self.hyp_length)
            <= self.distance
            <= max(self.ref_length, self.hyp_length)
        ):
            raise ValueError(
                f"distance {self.distance} outside bounds for lengths "
                f"{self.ref_length}/{self.hyp_length}"
            )
        return self


class Segment(BaseModel):
    """One timed, speaker-labeled utterance of a session."""
    model_config = ConfigDict(frozen=True, populate_by_name=True, extra="ignore")

    session_id: StrictStr = Field(..., alias="session", description="Session identifier")
    speaker_id: StrictStr = Field(..., alias="speaker", description="Speaker label")
    start: StrictInt = Field(..., ge=0, alias="start_ms", description="Start time in ms")
    end: StrictInt = Field(..., ge=0, alias="end_ms", description="End time in ms")
    text: StrictStr = Field(..., description="Transcript text")

    @field_validator("session_id", "speaker_id")
    @classmethod
    def _check_identifier(cls, value: str) -> str:
        if not value:
            raise ValueError("identifier must be non-empty")
        if any(ch in value for ch in "\t\r\n"):
            raise ValueError("identifier must not contain tab or line-break characters")
        return value

    @field_validator("session_id", "speaker_id", "text")
    @classmethod
    def _check_scalars(cls, value: str) -> str:
        try:
            value.encode("utf-8")
        except UnicodeEncodeError as e:
            raise ValueError(f"lone surrogate at position {e.start}") from e
        return value

    @model_validator(mode="after")
    def _check_times(self) -> "Segment":
        if self.end < self.start:
            raise ValueError(f"end ({self.end}) is before start ({self.start})")
        return self

    @property
    def record_key(self) -> Tuple[str, str, int, int, str]:
        return (self.session_id, self.speaker_id, self.start, self.end, self.text)


class SpeakerStream(BaseModel):
    """A speaker's chronologically concatenated session transcript."""
    model_config = ConfigDict(frozen=True)

    speaker_id: str = Field(..., description="Speaker label, or a reserved blank label")
    tokens: TokenSequence = Field(default_factory=TokenSequence, description="Concatenated tokens")
    source_segment_count: int = Field(default=0, ge=0, description="Segments concatenated")
    is_padding: bool = Field(default=False, description="Synthetic blank stream")

    @property
    def length(self) -> int:
        return self.tokens.length


class SessionPair(BaseModel):
    """Reference and hypothesis speaker streams of one session."""
    model_config = ConfigDict(frozen=True)

    session_id: str = Field(..., description="Session identifier")
    ref_streams: List[SpeakerStream] = Field(..., description="Reference speakers (Y)")
    hyp_streams: List[SpeakerStream] = Field(default_factory=list, description="Hypothesis speakers (H)")

    @model_validator(mode="after")
    def _check_speakers(self) -> "SessionPair":
        if not self.ref_streams:
            raise ValueError(f"session {self.session_id!r} has no reference speaker")
        for side, streams in (("reference", self.ref_streams), ("hypothesis", self.hyp_streams)):
            ids = [s.speaker_id for s in streams]
            if len(set(ids)) != len(ids):
                raise ValueError(f"duplicate {side} speaker in session {self.session_id!r}")
        return self

    @property
    def oracle_speakers(self) -> int:
        return sum(1 for s in self.ref_streams if not s.is_padding)

    @property
    def estimated_speakers(self) -> int:
        return sum(1 for s in self.hyp_streams if not s.is_padding)

    @property
    def total_ref_tokens(self) -> int:
        return sum(s.length for s in self.ref_streams if not s.is_padding)


class Corpus(BaseModel):
    """Parsed transcript file, grouped into per-session speaker streams."""
    model_config = ConfigDict(frozen=True)

    source: str = Field(..., description="Source path or '<bytes>'")
    input_format: InputFormat = Field(default=InputFormat.TSV, description="Parsed format")
    normalization: NormalizationConfig = Field(
        default_factory=NormalizationConfig, description="Normalization used"
    )
    segments: List[Segment] = Field(default_factory=list, description="Deduplicated segments")
    sessions: Dict[str, List[SpeakerStream]] = Field(
        default_factory=dict, description="session_id -> speaker streams"
    )


class CostMatrix(BaseModel):
    """Square matrix of pairwise edit distances between padded speakers."""
    model_config = ConfigDict(frozen=True)

    cells: List[List[int]] = Field(..., description="cell[i][j] = d(Y[i], H[j])")

    @field_validator("cells")
    @classmethod
    def _check_square(cls, cells: List[List[int]]) -> List[List[int]]:
        size = len(cells)
        for row in cells:
            if len(row) != size:
                raise ValueError("cost matrix must be square")
            if any(c < 0 for c in row):
                raise ValueError("cost matrix cells must be non-negative")
        return cells

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells)

    def to_array(self) -> np.ndarray:
        return np.asarray(self.cells, dtype=np.int64).reshape(self.rows, self.cols)


class AlignmentOutcome(BaseModel):
    """Best speaker permutation of a session and its cpCER."""
    model_config = ConfigDict(frozen=True)

    permutation: Tuple[int, ...] = Field(..., description="Padded ref index -> hyp index")
    min_distance: int = Field(..., ge=0, description="mindistance")
    total_ref_tokens: int = Field(..., ge=0, description="totaltoken")

    @field_validator("permutation")
    @classmethod
    def _check_bijection(cls, perm: Tuple[int, ...]) -> Tuple[int, ...]:
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"permutation {perm} is not a bijection")
        return perm

    @property
    def cpcer(self) -> Fraction:
        return percent(self.min_distance, self.total_ref_tokens)


class SessionScore(BaseModel):
    """Per-session cpCER record."""
    model_config = ConfigDict(frozen=True)

    session_id: str = Field(..., description="Session identifier")
    oracle_speakers: int = Field(..., ge=1, description="S")
    estimated_speakers: int = Field(..., ge=0, description="Ŝ")
    min_distance: int = Field(..., ge=0, description="Minimum total edit distance")
    total_ref_tokens: int = Field(..., ge=0, description="Reference tokens")
    permutation: List[Tuple[Optional[str], Optional[str]]] = Field(
        default_factory=list, description="(ref speaker, hyp speaker); None marks blank padding"
    )

    @property
    def cpcer(self) -> Fraction:
        return percent(self.min_distance, self.total_ref_tokens)

    @property
    def missed_speakers(self) -> int:
        return max(0, self.oracle_speakers - self.estimated_speakers)

    @property
    def falarm_speakers(self) -> int:
        return max(0, self.estimated_speakers - self.oracle_speakers)


class GroupReport(BaseModel):
    """cpCER aggregate over a group of sessions."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    key: str = Field(..., description="Oracle speaker count, or 'all'")
    session_count: int = Field(..., ge=0, description="Sessions in the group")
    total_distance: int = Field(..., ge=0, description="Σ min_distance")
    total_ref_tokens: int = Field(..., ge=0, description="Σ total_ref_tokens")
    micro_cpcer: Fraction = Field(..., description="Token-weighted cpCER in percent")
    macro_cpcer: Fraction = Field(..., description="Mean session cpCER in percent")


class SpeakerCountStats(BaseModel):
    """Estimated vs oracle speaker number over sessions."""
    model_config = ConfigDict(frozen=True)

    under: int = Field(default=0, ge=0, description="Sessions with Ŝ < S")
    equal: int = Field(default=0, ge=0, description="Sessions with Ŝ = S")
    over: int = Field(default=0, ge=0, description="Sessions with Ŝ > S")

    @property
    def total(self) -> int:
        return self.under + self.equal + self.over

    @property
    def pct_under(self) -> Fraction:
        return percent(self.under, self.total)

    @property
    def pct_equal(self) -> Fraction:
        return percent(self.equal, self.total)

    @property
    def pct_over(self) -> Fraction:
        return percent(self.over, self.total)


class ScoreReport(BaseModel):
    """Everything a report serializer needs."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    sessions: List[SessionScore] = Field(default_factory=list, description="Per-session records")
    groups: List[GroupReport] = Field(default_factory=list, description="Group aggregates")
    speaker_counting: Optional[SpeakerCountStats] = Field(
        None, description="Speaker counting statistics"
    )
