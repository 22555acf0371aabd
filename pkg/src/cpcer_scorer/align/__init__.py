"""Speaker permutation alignment and session cpCER."""

from .assignment import MAX_BRUTE_FORCE_SPEAKERS, brute_force_assignment, min_assignment
from .session import (
    build_cost_matrix,
    pad_to_equal,
    score_session,
    score_session_record,
)

__all__ = [
    "MAX_BRUTE_FORCE_SPEAKERS",
    "brute_force_assignment",
    "build_cost_matrix",
    "min_assignment",
    "pad_to_equal",
    "score_session",
    "score_session_record",
]
