"""Levenshtein distance engines."""

from .distance import cer, edit_distance_dp, edit_distance_fast, pairwise_distances

__all__ = [
    "cer",
    "edit_distance_dp",
    "edit_distance_fast",
    "pairwise_distances",
]
