"""Embedded oracle-equivalence checks on random instances."""

import logging
import random
from typing import List

from ..align import brute_force_assignment, min_assignment
from ..editdist import edit_distance_dp, edit_distance_fast

logger = logging.getLogger(__name__)

# ASCII and CJK scalars, few enough that random strings share characters.
ALPHABET = "abcdefxyz0123" + "你好我们的是在有人会议"


def random_text(rng: random.Random, max_length: int) -> str:
    return "".join(rng.choice(ALPHABET) for _ in range(rng.randint(0, max_length)))


def check_assignment(
    rng: random.Random, trials: int, max_size: int = 7, max_cost: int = 10_000
) -> List[str]:
    mismatches = []
    for trial in range(trials):
        n = rng.randint(1, max_size)
        matrix = [[rng.randint(0, max_cost) for _ in range(n)] for _ in range(n)]
        fast = min_assignment(matrix)
        slow = brute_force_assignment(matrix)
        if fast != slow:
            mismatches.append(f"assignment trial {trial}: {fast} != {slow} for {matrix}")
    return mismatches


def check_edit_distance(rng: random.Random, trials: int, max_length: int = 512) -> List[str]:
    mismatches = []
    for trial in range(trials):
        a, b = random_text(rng, max_length), random_text(rng, max_length)
        fast = edit_distance_fast(a, b).distance
        slow = edit_distance_dp(a, b).distance
        if fast != slow:
            mismatches.append(f"edit distance trial {trial}: {fast} != {slow} for {a!r}, {b!r}")
    return mismatches


def run_selftest(trials: int = 1000, seed: int = 0) -> List[str]:
    """Return a description of every mismatch; empty means all checks passed."""
    rng = random.Random(seed)
    mismatches = check_assignment(rng, trials) + check_edit_distance(rng, trials)
    for mismatch in mismatches:
        logger.error(mismatch)
    return mismatches
