"""Report serialization: JSON, TSV and console tables."""

import math
from fractions import Fraction
from typing import BinaryIO, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, TypeAdapter
from tabulate import tabulate

from ..models import GroupReport, ReportFormat, ReportIoError, ScoreReport
from .aggregate import ALL_GROUP


DISPLAY_DIGITS = 2

SystemReport = Tuple[str, ScoreReport]


def round_half_up(value: Fraction, digits: int = 0) -> Fraction:
    scale = 10**digits
    return Fraction(math.floor(value * scale + Fraction(1, 2)), scale)


def format_fixed(value: Fraction, digits: int = DISPLAY_DIGITS) -> str:
    """Exact fixed-point rendering, rounded half up."""
    scaled = math.floor(abs(value) * 10**digits + Fraction(1, 2))
    sign = "-" if value < 0 and scaled else ""
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"


class Rational(BaseModel):
    numerator: int
    denominator: int

    @classmethod
    def of(cls, value: Fraction) -> "Rational":
        return cls(numerator=value.numerator, denominator=value.denominator)


class GroupDocument(BaseModel):
    group: str = Field(..., description="Oracle speaker count or 'all'")
    session_count: int
    total_distance: int
    total_ref_tokens: int
    micro_cpcer: str
    macro_cpcer: str
    micro_cpcer_exact: Rational
    macro_cpcer_exact: Rational


class SpeakerCountingDocument(BaseModel):
    session_count: int
    under: int
    equal: int
    over: int
    pct_under: int
    pct_equal: int
    pct_over: int
    pct_under_exact: Rational
    pct_equal_exact: Rational
    pct_over_exact: Rational


class SessionDocument(BaseModel):
    session_id: str
    oracle_speakers: int
    estimated_speakers: int
    missed_speakers: int
    falarm_speakers: int
    min_distance: int
    total_ref_tokens: int
    cpcer: str
    cpcer_exact: Rational
    permutation: List[Tuple[Optional[str], Optional[str]]]


class ReportDocument(BaseModel):
    """Stable JSON report schema; field order is serialization order."""
    session_count: int
    groups: List[GroupDocument]
    speaker_counting: Optional[SpeakerCountingDocument]
    sessions: List[SessionDocument]


def to_document(report: ScoreReport) -> ReportDocument:
    stats = report.speaker_counting
    return ReportDocument(
        session_count=len(report.sessions),
        groups=[
            GroupDocument(
                group=g.key,
                session_count=g.session_count,
                total_distance=g.total_distance,
                total_ref_tokens=g.total_ref_tokens,
                micro_cpcer=format_fixed(g.micro_cpcer),
                macro_cpcer=format_fixed(g.macro_cpcer),
                micro_cpcer_exact=Rational.of(g.micro_cpcer),
                macro_cpcer_exact=Rational.of(g.macro_cpcer),
            )
            for g in report.groups
        ],
        speaker_counting=None
        if stats is None
        else SpeakerCountingDocument(
            session_count=stats.total,
            under=stats.under,
            equal=stats.equal,
            over=stats.over,
            pct_under=int(round_half_up(stats.pct_under)),
            pct_equal=int(round_half_up(stats.pct_equal)),
            pct_over=int(round_half_up(stats.pct_over)),
            pct_under_exact=Rational.of(stats.pct_under),
            pct_equal_exact=Rational.of(stats.pct_equal),
            pct_over_exact=Rational.of(stats.pct_over),
        ),
        sessions=[
            SessionDocument(
                session_id=s.session_id,
                oracle_speakers=s.oracle_speakers,
                estimated_speakers=s.estimated_speakers,
                missed_speakers=s.missed_speakers,
                falarm_speakers=s.falarm_speakers,
                min_distance=s.min_distance,
                total_ref_tokens=s.total_ref_tokens,
                cpcer=format_fixed(s.cpcer),
                cpcer_exact=Rational.of(s.cpcer),
                permutation=s.permutation,
            )
            for s in report.sessions
        ],
    )


def _group_label(group: GroupReport) -> str:
    if group.key == ALL_GROUP:
        return "Average"
    return f"{group.key}-Speaker sessions ({group.session_count})"


def _tsv(rows: Sequence[Sequence[object]]) -> str:
    return "".join("\t".join(str(cell) for cell in row) + "\n" for row in rows)


TSV_COLUMNS = ("kind", "key", "sessions", "distance", "ref_tokens", "micro_cpcer", "macro_cpcer")


def _tsv_rows(report: ScoreReport, per_session: bool) -> List[List[object]]:
    rows: List[List[object]] = []
    for g in report.groups:
        rows.append(
            [
                "group",
                g.key,
                g.session_count,
                g.total_distance,
                g.total_ref_tokens,
                format_fixed(g.micro_cpcer),
                format_fixed(g.macro_cpcer),
            ]
        )
    if per_session:
        for s in report.sessions:
            cpcer = format_fixed(s.cpcer)
            rows.append(["session", s.session_id, 1, s.min_distance, s.total_ref_tokens, cpcer, cpcer])
    return rows


def _speaker_counting_tsv(report: ScoreReport) -> List[List[object]]:
    stats = report.speaker_counting
    if stats is None:
        return []
    unused = ["-"] * (len(TSV_COLUMNS) - 3)
    return [
        ["speaker_counting", name, count, *unused]
        for name, count in (("under", stats.under), ("equal", stats.equal), ("over", stats.over))
    ]


def _render_tsv(report: ScoreReport, per_session: bool) -> str:
    return _tsv([TSV_COLUMNS, *_tsv_rows(report, per_session), *_speaker_counting_tsv(report)])


def _speaker_counting_cells(report: ScoreReport) -> List[int]:
    stats = report.speaker_counting
    if stats is None:
        return []
    return [int(round_half_up(p)) for p in (stats.pct_under, stats.pct_equal, stats.pct_over)]


SPEAKER_COUNTING_HEADERS = ["e_spk < o_spk", "e_spk = o_spk", "e_spk > o_spk"]


def _render_pretty(report: ScoreReport, per_session: bool) -> str:
    if not report.sessions:
        return "No sessions scored.\n"

    headers = ["cpCER (%)", *(_group_label(g) for g in report.groups)]
    rows = [
        ["micro", *(format_fixed(g.micro_cpcer) for g in report.groups)],
        ["macro", *(format_fixed(g.macro_cpcer) for g in report.groups)],
    ]
    parts = [tabulate(rows, headers=headers, tablefmt="grid", disable_numparse=True)]

    parts.append(
        "Speaker counting accuracy (%)\n"
        + tabulate(
            [_speaker_counting_cells(report)],
            headers=SPEAKER_COUNTING_HEADERS,
            tablefmt="grid",
            disable_numparse=True,
        )
    )

    if per_session:
        session_rows = [
            [
                s.session_id,
                s.oracle_speakers,
                s.estimated_speakers,
                s.min_distance,
                s.total_ref_tokens,
                format_fixed(s.cpcer),
            ]
            for s in report.sessions
        ]
        parts.append(
            tabulate(
                session_rows,
                headers=["Session", "S", "Ŝ", "Distance", "Ref tokens", "cpCER (%)"],
                tablefmt="grid",
                disable_numparse=True,
            )
        )
    return "\n\n".join(parts) + "\n"


def _write(data: bytes, output: Optional[BinaryIO]) -> bytes:
    if output is not None:
        try:
            output.write(data)
            output.flush()
        except OSError as e:
            raise ReportIoError(f"cannot write report: {e}") from e
    return data


def emit_report(
    report: ScoreReport,
    report_format: ReportFormat = ReportFormat.PRETTY,
    per_session: bool = False,
    output: Optional[BinaryIO] = None,
) -> bytes:
    """Serialize a report deterministically, optionally writing it to ``output``.

    JSON always lists the sessions; TSV and pretty only with ``per_session``.
    """
    report_format = ReportFormat(report_format)
    if report_format == ReportFormat.JSON:
        text = to_document(report).model_dump_json(indent=2) + "\n"
    elif report_format == ReportFormat.TSV:
        text = _render_tsv(report, per_session)
    else:
        text = _render_pretty(report, per_session)
    return _write(text.encode("utf-8"), output)


class SystemDocument(BaseModel):
    system: str
    report: ReportDocument


_SYSTEMS_ADAPTER = TypeAdapter(List[SystemDocument])


def _render_comparison_pretty(systems: Sequence[SystemReport]) -> str:
    if not systems:
        return "No systems scored.\n"

    labels = {}
    for _, report in systems:
        for g in report.groups:
            labels.setdefault(g.key, _group_label(g))
    keys = sorted((k for k in labels if k != ALL_GROUP), key=int)
    if ALL_GROUP in labels:
        keys.append(ALL_GROUP)

    cpcer_rows = []
    counting_rows = []
    for name, report in systems:
        by_key = {g.key: g for g in report.groups}
        cpcer_rows.append(
            [name, *(format_fixed(by_key[k].micro_cpcer) if k in by_key else "-" for k in keys)]
        )
        counting_rows.append([name, *(_speaker_counting_cells(report) or ["-"] * 3)])

    return (
        tabulate(
            cpcer_rows,
            headers=["System", *(labels[k] for k in keys)],
            tablefmt="grid",
            disable_numparse=True,
        )
        + "\n\nSpeaker counting accuracy (%)\n"
        + tabulate(
            counting_rows,
            headers=["System", *SPEAKER_COUNTING_HEADERS],
            tablefmt="grid",
            disable_numparse=True,
        )
        + "\n"
    )


def emit_comparison(
    systems: Sequence[SystemReport],
    report_format: ReportFormat = ReportFormat.PRETTY,
    output: Optional[BinaryIO] = None,
) -> bytes:
    """Several systems scored against one reference, one row per system."""
    report_format = ReportFormat(report_format)
    if report_format == ReportFormat.JSON:
        documents = [
            SystemDocument(system=name, report=to_document(report)) for name, report in systems
        ]
        text = _SYSTEMS_ADAPTER.dump_json(documents, indent=2).decode("utf-8") + "\n"
    elif report_format == ReportFormat.TSV:
        rows: List[List[object]] = [["system", *TSV_COLUMNS]]
        for name, report in systems:
            rows.extend([name, *row] for row in _tsv_rows(report, per_session=False))
        text = _tsv(rows)
    else:
        text = _render_comparison_pretty(systems)
    return _write(text.encode("utf-8"), output)

