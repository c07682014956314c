"""Building, checking and downshifting equitable colourings.

``construct_coloring`` builds an r-colouring directly.  ``downshift`` turns
an r-colouring, given as a ClassProfile, into an (r-1)-colouring by the
reverse-induction step: either drop one class from a part that carries b
small classes, or re-cut one part into classes of sizes b and b + 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import (
    ClassProfile,
    EquitableColoring,
    EquitableError,
    InfeasibleError,
    Instance,
    InvalidProfile,
    ceil_div,
)
from .feasibility import feasible


class NoApplicableCase(InfeasibleError):
    """Downshift target r - 1 has no equitable colouring."""


class UnreachableCase(EquitableError, RuntimeError):
    """The case analysis failed although r - 1 is feasible (internal error)."""


class Case(enum.Enum):
    CASE1 = "CASE1"
    SUBCASE2_1 = "SUBCASE2_1"
    SUBCASE2_2_SHIFT = "SUBCASE2_2_SHIFT"


@dataclass(frozen=True)
class DownshiftTrace:
    case_taken: Case
    j: int
    g_j: int | None = None


def construct_coloring(instance: Instance, r: int) -> EquitableColoring:
    if not feasible(instance, r):
        raise InfeasibleError(instance, r)
    N = instance.total
    if r >= N:
        return EquitableColoring(
            classes=tuple((1,) * n for n in instance.sizes), empty_classes=r - N
        )
    s = N // r
    counts = [ceil_div(n, s + 1) for n in instance.sizes]
    slack = r - sum(counts)
    for i, n in enumerate(instance.sizes):
        if slack == 0:
            break
        step = min(slack, n // s - counts[i])
        counts[i] += step
        slack -= step
    classes = []
    for n, t in zip(instance.sizes, counts):
        big = n - s * t
        classes.append((s + 1,) * big + (s,) * (t - big))
    return EquitableColoring(classes=tuple(classes))


def coloring_problems(instance: Instance, coloring: EquitableColoring) -> list[str]:
    """Reasons ``coloring`` is not an equitable colouring of ``instance``.

    An empty list means the colouring is valid.  Properness needs no check:
    a class is a list of sizes inside one partite set by construction.
    """
    problems = []
    if len(coloring.classes) != instance.k:
        problems.append(
            f"part_count: coloring has {len(coloring.classes)} parts, "
            f"instance has {instance.k}"
        )
    if coloring.empty_classes < 0:
        problems.append(f"negative_empty: empty_classes={coloring.empty_classes}")
    for i, (n, part) in enumerate(zip(instance.sizes, coloring.classes)):
        if any(c < 1 for c in part):
            problems.append(f"nonpositive_class: part {i} has sizes {list(part)}")
        if sum(part) != n:
            problems.append(f"sum_mismatch: part {i} sums to {sum(part)}, expected {n}")
    sizes = coloring.all_sizes()
    if not sizes:
        problems.append("no_classes: coloring is empty")
    elif max(sizes) - min(sizes) > 1:
        problems.append(f"unbalanced: class sizes range {min(sizes)}..{max(sizes)}")
    return problems


def verify_coloring(instance: Instance, coloring: EquitableColoring) -> bool:
    return not coloring_problems(instance, coloring)


def coloring_from_profile(profile: ClassProfile) -> EquitableColoring:
    classes = []
    empty = 0
    for i in range(len(profile.per_part)):
        sizes = profile.class_sizes(i)
        empty += sizes.count(0)
        classes.append(tuple(c for c in sizes if c > 0))
    return EquitableColoring(classes=tuple(classes), empty_classes=empty)


def profile_from_coloring(instance: Instance, coloring: EquitableColoring) -> ClassProfile:
    """Express a valid colouring as a ClassProfile.

    Empty classes are charged to the first partite set.
    """
    problems = coloring_problems(instance, coloring)
    if problems:
        raise InvalidProfile("; ".join(problems))
    r = coloring.num_classes
    b = ceil_div(instance.total, r)
    per_part = []
    for i, part in enumerate(coloring.classes):
        small = sum(1 for c in part if c == b - 1)
        extra = coloring.empty_classes if i == 0 else 0
        per_part.append((len(part) + extra, small + extra))
    profile = ClassProfile(r=r, b=b, per_part=tuple(per_part))
    profile.validate(instance)
    return profile


def canonical_profile(instance: Instance, r: int) -> ClassProfile:
    return profile_from_coloring(instance, construct_coloring(instance, r))


def _recut(instance: Instance, profile: ClassProfile, j: int) -> ClassProfile:
    """Re-cut part j into r_j - 1 near-equal classes; other parts keep theirs.

    Only valid when every other class has size b, which Case 2 guarantees
    for k >= 2.  The new largest class size is then b + 1.
    """
    r = profile.r - 1
    b_new = ceil_div(instance.total, r)
    per_part = []
    for i, (n, (ri, si)) in enumerate(zip(instance.sizes, profile.per_part)):
        if i == j:
            ri -= 1
        # n = ri * b_new - si' for classes of sizes b_new and b_new - 1
        per_part.append((ri, ri * b_new - n))
    return ClassProfile(r=r, b=b_new, per_part=tuple(per_part))


def _case_analysis(instance: Instance, profile: ClassProfile):
    b = profile.b
    sizes = instance.sizes
    targets = [ceil_div(n, b) for n in sizes]

    for j, ((rj, sj), target) in enumerate(zip(profile.per_part, targets)):
        if rj != target:
            # n_j = ceil(n_j/b) b - g_j, and s_j - g_j is a positive multiple of b
            g_j = target * b - sizes[j]
            if sj - g_j <= 0 or (sj - g_j) % b:
                raise UnreachableCase(
                    f"case 1 arithmetic failed at part {j}: s_j={sj}, g_j={g_j}, b={b}"
                )
            per_part = list(profile.per_part)
            per_part[j] = (rj - 1, sj - b)
            new = ClassProfile(r=profile.r - 1, b=b, per_part=tuple(per_part))
            return new, DownshiftTrace(Case.CASE1, j, g_j)

    # Case 2: every part uses the fewest classes of size <= b.
    non_multiples = [i for i, n in enumerate(sizes) if n % b]
    if instance.k == 1:
        if profile.r < 2:
            return None
        case = Case.SUBCASE2_1 if non_multiples else Case.SUBCASE2_2_SHIFT
        return _recut(instance, profile, 0), DownshiftTrace(case, 0)
    if len(non_multiples) >= 2:
        return None
    if len(non_multiples) == 1:
        j = non_multiples[0]
        m = sizes[j] // b
        if m >= 1 and sizes[j] <= (b + 1) * m:
            return _recut(instance, profile, j), DownshiftTrace(Case.SUBCASE2_1, j)
        return None
    for j, (n, (rj, _)) in enumerate(zip(sizes, profile.per_part)):
        if rj >= 2 and n <= (b + 1) * (rj - 1):
            return _recut(instance, profile, j), DownshiftTrace(Case.SUBCASE2_2_SHIFT, j)
    return None


def downshift(
    instance: Instance, profile: ClassProfile
) -> tuple[ClassProfile, DownshiftTrace]:
    """One reverse-induction step: an equitable r-profile to an (r-1)-profile.

    Raises NoApplicableCase when r - 1 admits no equitable colouring, and
    UnreachableCase if the cases fail although r - 1 is feasible.
    """
    profile.validate(instance)
    outcome = _case_analysis(instance, profile) if profile.r >= 2 else None
    if outcome is None:
        if profile.r < 2 or not feasible(instance, profile.r - 1):
            raise NoApplicableCase(instance, profile.r - 1)
        raise UnreachableCase(
            f"no downshift case applies to {instance} at r={profile.r}, "
            f"yet r-1 is feasible"
        )
    new, trace = outcome
    try:
        new.validate(instance)
    except InvalidProfile as exc:
        raise UnreachableCase(f"{trace.case_taken.value} produced a bad profile: {exc}")
    problems = coloring_problems(instance, coloring_from_profile(new))
    if problems:
        raise UnreachableCase(f"{trace.case_taken.value} produced {problems}")
    return new, trace
