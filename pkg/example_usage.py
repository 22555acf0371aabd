#!/usr/bin/env python3
"""Example usage of the cpCER scorer as a library."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent / "src"))

from cpcer_scorer.corpus import build_corpus, pair_corpora, parse_segments_tsv  # noqa: E402
from cpcer_scorer.cli.pipeline import score_pairs  # noqa: E402
from cpcer_scorer.models import ReportFormat  # noqa: E402
from cpcer_scorer.report import build_report, emit_report  # noqa: E402

REFERENCE = """\
session\tspeaker\tstart\tend\ttext
M01\tA\t0\t1200\t今天 我们 讨论 预算
M01\tB\t1300\t2500\t好的 我先说
M01\tA\t2600\t4000\t请 开始
M02\tC\t0\t900\t会议 开始
"""

# M01: speaker labels swapped and one character wrong; a spurious extra
# speaker is emitted. M02: transcribed perfectly.
HYPOTHESIS = """\
M01\tspk2\t0\t1200\t今天 我们 讨论 预算
M01\tspk1\t1300\t2500\t好的 我先讲
M01\tspk2\t2600\t4000\t请 开始
M01\tspk3\t4100\t4300\t嗯
M02\tspk1\t0\t900\t会议 开始
"""


def main() -> None:
    ref = build_corpus(parse_segments_tsv(REFERENCE.encode("utf-8")), source="reference")
    hyp = build_corpus(parse_segments_tsv(HYPOTHESIS.encode("utf-8")), source="hypothesis")

    scores = score_pairs(pair_corpora(ref, hyp))
    for s in scores:
        print(f"{s.session_id}: {s.min_distance}/{s.total_ref_tokens} -> {float(s.cpcer):.2f}%")
        print(f"  speaker mapping: {s.permutation}")

    report = build_report(scores)
    print(emit_report(report, ReportFormat.PRETTY, per_session=True).decode("utf-8"))


if __name__ == "__main__":
    main()
