"""Deciding equitable r-colourability of a complete multipartite graph.

With r < N classes, an equitable colouring uses sizes s and s + 1 where
s = N // r.  Partite set i can be cut into t classes of those sizes exactly
when ceil(n_i / (s+1)) <= t <= n_i // s, so r is attainable iff every such
interval is nonempty and r lies between the sums of their endpoints.
"""

from __future__ import annotations

from .core import FeasibilityReport, Instance, ceil_div


def _require_positive(r: int, name: str = "r") -> None:
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise ValueError(f"{name} must be a positive integer, got {r!r}")


def class_count_bounds(instance: Instance, r: int) -> list[tuple[int, int]] | None:
    """Per-set (min, max) class counts using sizes N//r and N//r + 1.

    Returns None when r >= N (singletons plus empty classes, no bounds needed).
    """
    _require_positive(r)
    if r >= instance.total:
        return None
    s = instance.total // r
    return [(ceil_div(n, s + 1), n // s) for n in instance.sizes]


def feasible(instance: Instance, r: int) -> bool:
    bounds = class_count_bounds(instance, r)
    if bounds is None:
        return True
    lo = hi = 0
    for a, z in bounds:
        if a > z:
            return False
        lo += a
        hi += z
    return lo <= r <= hi


def min_equitable(instance: Instance) -> int:
    """Equitable chromatic number: smallest r with an equitable r-colouring."""
    for r in range(1, instance.total + 1):
        if feasible(instance, r):
            return r
    raise AssertionError("r = N is always feasible")  # pragma: no cover


def spectrum(instance: Instance, r_max: int | None = None) -> FeasibilityReport:
    if r_max is None:
        r_max = instance.total
    _require_positive(r_max, "r_max")
    entries = {r: feasible(instance, r) for r in range(1, r_max + 1)}
    return FeasibilityReport(instance=instance, entries=entries)
