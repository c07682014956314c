"""Brute-force ground truth for small instances.

Enumerates every assignment of class counts to partite sets and, for each,
searches for a common pair of consecutive class sizes.  Nothing here reuses
the interval bounds from ``feasibility``; only integer sums and products are
used, so the two routes can be compared as independent answers.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .core import EquitableError, Instance

DEFAULT_BUDGET = 10**6


class OracleBudgetExceeded(EquitableError):
    """Instance too large for exhaustive enumeration."""


@lru_cache(maxsize=None)
def split_levels(n: int, t: int) -> frozenset[int]:
    """All a >= 0 such that n splits into t nonempty parts of sizes a or a+1."""
    levels = set()
    for a in range(0, n + 1):
        for big in range(0, t + 1):
            parts = [a + 1] * big + [a] * (t - big)
            if min(parts) >= 1 and sum(parts) == n:
                levels.add(a)
    return frozenset(levels)


def _check_budget(sizes, budget):
    space = math.prod(sizes)
    if space > budget:
        raise OracleBudgetExceeded(
            f"{space} class-count tuples exceed the oracle budget of {budget}"
        )


def _tuples(sizes, remaining):
    """Class counts t_i in [1, n_i] with sum(t) <= remaining, lexicographic."""
    if not sizes:
        yield ()
        return
    head, rest = sizes[0], sizes[1:]
    floor_rest = len(rest)
    for t in range(1, min(head, remaining - floor_rest) + 1):
        for tail in _tuples(rest, remaining - t):
            yield (t,) + tail


def oracle_feasible(instance: Instance, r: int, budget: int = DEFAULT_BUDGET) -> bool:
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    sizes = instance.sizes
    _check_budget(sizes, budget)
    for counts in _tuples(sizes, r):
        empty = r - sum(counts)
        common = None
        for n, t in zip(sizes, counts):
            levels = split_levels(n, t)
            common = levels if common is None else common & levels
            if not common:
                break
        if not common:
            continue
        # size-0 classes are only compatible with the level {0, 1}
        if empty == 0 or 0 in common:
            return True
    return False


def oracle_threshold(instance: Instance, budget: int = DEFAULT_BUDGET) -> int:
    infeasible = [
        r
        for r in range(1, instance.total + 1)
        if not oracle_feasible(instance, r, budget)
    ]
    return max(infeasible) + 1 if infeasible else 1
