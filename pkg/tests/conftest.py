"""Shared fixtures."""

import random
from pathlib import Path
from typing import Dict

import pytest

from .helpers import HYPOTHESIS_ROWS, REFERENCE_ROWS, tsv


@pytest.fixture
def rng() -> random.Random:
    return random.Random(1234)


@pytest.fixture
def corpus_files(tmp_path: Path) -> Dict[str, Path]:
    """Reference and hypothesis TSV files for three sessions."""
    ref = tmp_path / "ref.tsv"
    hyp = tmp_path / "hyp.tsv"
    ref.write_text(tsv(REFERENCE_ROWS), encoding="utf-8")
    hyp.write_text(tsv(HYPOTHESIS_ROWS), encoding="utf-8")
    return {"ref": ref, "hyp": hyp}
