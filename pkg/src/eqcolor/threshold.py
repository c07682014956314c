"""The witness d, the interval anchor p(q: n_1,...,n_k) and the threshold.

Given a feasible q, d is the least integer >= ceil(N/q) such that either
two distinct parts are not multiples of d, or some part n has
n / floor(n/d) > d + 1 (taken as infinite when d > n).  Then
p = sum(ceil(n_i / d)) is the least p for which every r in [p, q] admits
an equitable r-colouring.
"""

from __future__ import annotations

from .core import InfeasibleError, Instance, ThresholdResult, ceil_div
from .feasibility import _require_positive, feasible


def is_witness(sizes, d: int) -> bool:
    """True if d meets either stopping condition for ``sizes``."""
    not_divisible = 0
    for n in sizes:
        m = n // d
        if m == 0 or n > (d + 1) * m:
            return True
        if n != m * d:
            not_divisible += 1
            if not_divisible >= 2:
                return True
    return False


def find_d(instance: Instance, q: int) -> int:
    _require_positive(q, "q")
    if not feasible(instance, q):
        raise InfeasibleError(instance, q)
    start = ceil_div(instance.total, q)
    if instance.k == 1:
        # One part means no edges: every r in [1, q] works, so anchor p at 1.
        return max(start, instance.sizes[0])
    bound = instance.sizes[-1] + 1
    d = start
    while not is_witness(instance.sizes, d):
        d += 1
    assert d <= max(start, bound)
    return d


def p_of_q(instance: Instance, q: int) -> ThresholdResult:
    """Least p such that an equitable r-colouring exists for all p <= r <= q.

    Raises InfeasibleError if the graph has no equitable q-colouring, in which
    case the quantity is undefined.
    """
    d = find_d(instance, q)
    p = sum(ceil_div(n, d) for n in instance.sizes)
    return ThresholdResult(d=d, p=p, q=q)


def equitable_chromatic_threshold(instance: Instance) -> ThresholdResult:
    return p_of_q(instance, instance.total)
