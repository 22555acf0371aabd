"""Utilities for the scorer."""

from .timing import timing_decorator

__all__ = [
    "timing_decorator"
]
