"""Tests for aggregation and report serialization."""

import io
import json
from fractions import Fraction

import pytest

from cpcer_scorer.models import ReportFormat, ReportIoError
from cpcer_scorer.report import (
    ALL_GROUP,
    aggregate,
    build_report,
    emit_comparison,
    emit_report,
    format_fixed,
    round_half_up,
    speaker_counting_stats,
)

from .helpers import session_score


def groups_by_key(groups):
    return {g.key: g for g in groups}


def counting_fixture(under, equal, over):
    scores = []
    for kind, count in (("under", under), ("equal", equal), ("over", over)):
        for k in range(count):
            estimated = {"under": 1, "equal": 2, "over": 3}[kind]
            scores.append(session_score(f"{kind}{k:02d}", 1, 10, oracle=2, estimated=estimated))
    return scores


TWO_SESSIONS = [session_score("S1", 1, 10), session_score("S2", 3, 10)]


class TestAggregate:
    def test_single_session(self):
        (group,) = aggregate([session_score("S1", 2, 4)], group_by_speaker_count=False)
        assert group.key == ALL_GROUP
        assert group.micro_cpcer == group.macro_cpcer == 50

    def test_equal_weights(self):
        everything = groups_by_key(aggregate(TWO_SESSIONS))[ALL_GROUP]
        assert everything.micro_cpcer == 20
        assert everything.macro_cpcer == 20

    def test_micro_differs_from_macro(self):
        everything = groups_by_key(aggregate([session_score("S1", 1, 10), session_score("S2", 3, 90)]))[ALL_GROUP]
        assert everything.micro_cpcer == 4
        assert everything.macro_cpcer == Fraction(20, 3)
        assert format_fixed(everything.macro_cpcer) == "6.67"

    def test_groups_ascend_numerically_with_all_last(self):
        scores = [
            session_score("a", 1, 10, oracle=10),
            session_score("b", 1, 10, oracle=2),
            session_score("c", 1, 10, oracle=3),
            session_score("d", 1, 10, oracle=2),
        ]
        assert [g.key for g in aggregate(scores)] == ["2", "3", "10", ALL_GROUP]

    def test_grouping_disabled(self):
        assert [g.key for g in aggregate(TWO_SESSIONS, group_by_speaker_count=False)] == [ALL_GROUP]

    def test_empty(self):
        assert aggregate([]) == []

    def test_partition_and_micro_consistency(self, rng):
        scores = [
            session_score(f"S{k}", rng.randint(0, 50), rng.randint(1, 100), oracle=rng.randint(1, 5))
            for k in range(40)
        ]
        groups = aggregate(scores)
        everything = groups[-1]
        assert sum(g.session_count for g in groups[:-1]) == everything.session_count == 40
        assert sum(g.total_distance for g in groups[:-1]) == everything.total_distance
        assert everything.micro_cpcer == Fraction(
            100 * sum(s.min_distance for s in scores), sum(s.total_ref_tokens for s in scores)
        )

    def test_zero_token_session_counts_as_zero(self):
        everything = aggregate([session_score("S1", 0, 0), session_score("S2", 1, 10)])[-1]
        assert everything.micro_cpcer == 10
        assert everything.macro_cpcer == 5


class TestSpeakerCounting:
    def test_all_correct(self):
        stats = speaker_counting_stats(counting_fixture(0, 20, 0))
        assert (stats.pct_under, stats.pct_equal, stats.pct_over) == (0, 100, 0)

    def test_mixed(self):
        stats = speaker_counting_stats(counting_fixture(2, 10, 8))
        assert (stats.pct_under, stats.pct_equal, stats.pct_over) == (10, 50, 40)

    def test_single_session(self):
        stats = speaker_counting_stats(counting_fixture(0, 1, 0))
        assert (stats.under, stats.equal, stats.over) == (0, 1, 0)
        assert stats.pct_equal == 100

    def test_percentages_are_multiples_of_session_share(self):
        stats = speaker_counting_stats(counting_fixture(1, 1, 1))
        assert stats.pct_under == Fraction(100, 3)
        document = json.loads(emit_report(build_report(counting_fixture(1, 1, 1)), ReportFormat.JSON))
        counting = document["speaker_counting"]
        assert (counting["pct_under"], counting["pct_equal"], counting["pct_over"]) == (33, 33, 33)
        assert counting["pct_under_exact"] == {"numerator": 100, "denominator": 3}


class TestRounding:
    @pytest.mark.parametrize(
        "value, expected",
        [
            (Fraction(0), "0.00"),
            (Fraction(20), "20.00"),
            (Fraction(1, 200), "0.01"),
            (Fraction(1, 201), "0.00"),
            (Fraction(225, 8), "28.13"),
            (Fraction(200, 3), "66.67"),
            (Fraction(600), "600.00"),
        ],
    )
    def test_format_fixed(self, value, expected):
        assert format_fixed(value) == expected

    def test_format_without_fraction_digits(self):
        assert format_fixed(Fraction(245, 2), 0) == "123"

    def test_round_half_up(self):
        assert round_half_up(Fraction(5, 2)) == 3
        assert round_half_up(Fraction(3, 2)) == 2
        assert round_half_up(Fraction(1, 3)) == 0
        assert round_half_up(Fraction(1, 200), 2) == Fraction(1, 100)


class TestEmitReport:
    def test_json_headline(self):
        document = json.loads(emit_report(build_report(TWO_SESSIONS), ReportFormat.JSON))
        everything = [g for g in document["groups"] if g["group"] == ALL_GROUP][0]
        assert everything["micro_cpcer"] == "20.00"
        assert everything["micro_cpcer_exact"] == {"numerator": 20, "denominator": 1}
        assert everything["total_distance"] == 4
        assert [s["session_id"] for s in document["sessions"]] == ["S1", "S2"]
        assert document["sessions"][0]["cpcer"] == "10.00"

    def test_json_keys_are_stable(self):
        document = json.loads(emit_report(build_report(TWO_SESSIONS), ReportFormat.JSON))
        assert list(document) == ["session_count", "groups", "speaker_counting", "sessions"]

    @pytest.mark.parametrize("report_format", list(ReportFormat))
    def test_deterministic(self, report_format):
        first = emit_report(build_report(TWO_SESSIONS), report_format, per_session=True)
        second = emit_report(build_report(list(reversed(TWO_SESSIONS))), report_format, per_session=True)
        assert first == second

    def test_empty_report(self):
        report = build_report([])
        assert report.groups == [] and report.speaker_counting is None
        document = json.loads(emit_report(report, ReportFormat.JSON))
        assert document == {"session_count": 0, "groups": [], "speaker_counting": None, "sessions": []}
        assert emit_report(report, ReportFormat.PRETTY) == b"No sessions scored.\n"
        assert emit_report(report, ReportFormat.TSV).decode().splitlines() == [
            "kind\tkey\tsessions\tdistance\tref_tokens\tmicro_cpcer\tmacro_cpcer"
        ]

    def test_tsv_rows(self):
        lines = emit_report(build_report(TWO_SESSIONS), ReportFormat.TSV).decode().splitlines()
        assert lines[1] == "group\t2\t2\t4\t20\t20.00\t20.00"
        assert lines[2] == "group\tall\t2\t4\t20\t20.00\t20.00"
        assert not any(line.startswith("session") for line in lines)
        assert lines[-3:] == [
            "speaker_counting\tunder\t0\t-\t-\t-\t-",
            "speaker_counting\tequal\t2\t-\t-\t-\t-",
            "speaker_counting\tover\t0\t-\t-\t-\t-",
        ]

    def test_tsv_rows_match_header_width(self):
        text = emit_report(build_report(TWO_SESSIONS), ReportFormat.TSV, per_session=True).decode()
        widths = {len(line.split("\t")) for line in text.splitlines()}
        assert widths == {7}

    def test_tsv_per_session(self):
        lines = emit_report(build_report(TWO_SESSIONS), ReportFormat.TSV, per_session=True).decode().splitlines()
        assert "session\tS1\t1\t1\t10\t10.00\t10.00" in lines
        assert "session\tS2\t1\t3\t10\t30.00\t30.00" in lines

    def test_pretty(self):
        text = emit_report(build_report(TWO_SESSIONS), ReportFormat.PRETTY).decode()
        assert "2-Speaker sessions (2)" in text
        assert "Average" in text
        assert "20.00" in text
        assert "Speaker counting accuracy (%)" in text
        assert "S1" not in text

    def test_pretty_per_session(self):
        text = emit_report(build_report(TWO_SESSIONS), ReportFormat.PRETTY, per_session=True).decode()
        assert "S1" in text and "30.00" in text

    def test_writes_to_stream(self):
        buffer = io.BytesIO()
        data = emit_report(build_report(TWO_SESSIONS), ReportFormat.JSON, output=buffer)
        assert buffer.getvalue() == data

    def test_write_failure(self):
        class Broken(io.RawIOBase):
            def writable(self):
                return True

            def write(self, data):
                raise OSError("disk full")

        with pytest.raises(ReportIoError):
            emit_report(build_report(TWO_SESSIONS), ReportFormat.JSON, output=Broken())


class TestEmitComparison:
    SYSTEMS = [
        ("baseline", build_report(TWO_SESSIONS)),
        ("official", build_report([session_score("S1", 0, 10), session_score("S2", 1, 10, oracle=3)])),
    ]

    def test_json(self):
        document = json.loads(emit_comparison(self.SYSTEMS, ReportFormat.JSON))
        assert [d["system"] for d in document] == ["baseline", "official"]
        assert document[1]["report"]["groups"][-1]["micro_cpcer"] == "5.00"

    def test_pretty_fills_missing_groups(self):
        text = emit_comparison(self.SYSTEMS, ReportFormat.PRETTY).decode()
        assert "baseline" in text and "official" in text
        assert "3-Speaker sessions (1)" in text
        assert " - " in text

    def test_tsv(self):
        lines = emit_comparison(self.SYSTEMS, ReportFormat.TSV).decode().splitlines()
        assert lines[0].startswith("system\tkind")
        assert "baseline\tgroup\tall\t2\t4\t20\t20.00\t20.00" in lines

    def test_no_systems(self):
        assert emit_comparison([], ReportFormat.PRETTY) == b"No systems scored.\n"
        assert json.loads(emit_comparison([], ReportFormat.JSON)) == []
