"""Minimum-cost speaker permutation search."""

import itertools
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..models import CostMatrix, TooManySpeakers

# 8! = 40320 permutations; beyond that enumeration stops being practical.
MAX_BRUTE_FORCE_SPEAKERS = 8

Matrix = Union[CostMatrix, np.ndarray, Sequence[Sequence[int]]]
Assignment = Tuple[Tuple[int, ...], int]


def _as_array(m: Matrix) -> np.ndarray:
    if isinstance(m, CostMatrix):
        return m.to_array()
    cost = np.asarray(m, dtype=np.int64)
    if cost.size == 0:
        return cost.reshape(0, 0)
    if cost.ndim != 2 or cost.shape[0] != cost.shape[1]:
        raise ValueError(f"cost matrix must be square, got shape {cost.shape}")
    return cost


def _optimum(cost: np.ndarray) -> int:
    if cost.size == 0:
        return 0
    rows, cols = linear_sum_assignment(cost)
    return int(cost[rows, cols].sum())


def min_assignment(m: Matrix) -> Assignment:
    """Optimal bijection rows -> columns and its total cost.

    The optimum comes from scipy's linear sum assignment solver. Among all
    optimal bijections the lexicographically smallest one is returned: rows
    are fixed in order to the smallest column that still admits an optimal
    completion of the remaining rows.
    """
    cost = _as_array(m)
    n = cost.shape[0]
    best = _optimum(cost)

    permutation: List[int] = []
    free_cols = list(range(n))
    fixed = 0
    for row in range(n):
        remaining = cost[row:, free_cols]
        for k, col in enumerate(free_cols):
            rest = np.delete(remaining[1:], k, axis=1)
            if fixed + int(cost[row, col]) + _optimum(rest) == best:
                permutation.append(col)
                fixed += int(cost[row, col])
                del free_cols[k]
                break
        else:  # pragma: no cover - the solver's optimum is always reachable
            raise RuntimeError(f"no optimal completion found for row {row}")

    return tuple(permutation), best


def brute_force_assignment(m: Matrix) -> Assignment:
    """Enumerate every permutation; lexicographically first optimum wins."""
    cost = _as_array(m)
    n = cost.shape[0]
    if n > MAX_BRUTE_FORCE_SPEAKERS:
        raise TooManySpeakers(
            f"permutation enumeration supports at most {MAX_BRUTE_FORCE_SPEAKERS} "
            f"speakers, got {n}"
        )
    cells = cost.tolist()
    best_perm: Optional[Tuple[int, ...]] = None
    best_total = 0
    for perm in itertools.permutations(range(n)):
        total = sum(cells[i][j] for i, j in enumerate(perm))
        if best_perm is None or total < best_total:
            best_perm, best_total = perm, total
    assert best_perm is not None
    return best_perm, best_total
