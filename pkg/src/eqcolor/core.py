"""Domain types and integer helpers shared by every module.

A complete multipartite graph K_{n_1,...,n_k} is fully described by its
partite-set sizes, so nothing here holds vertices or edges.  Every colour
class of a proper colouring lies inside a single partite set.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Iterable


class EquitableError(Exception):
    """Base class for errors raised by this package."""


class InvalidInstance(EquitableError, ValueError):
    pass


class InvalidProfile(EquitableError, ValueError):
    pass


class InfeasibleError(EquitableError):
    """No equitable colouring exists with the requested number of colours."""

    def __init__(self, instance: "Instance", r: int, message: str | None = None):
        self.instance = instance
        self.r = r
        super().__init__(message or f"no equitable {r}-coloring of {instance}")


def ceil_div(a: int, b: int) -> int:
    """Exact ceiling of a / b for a >= 0, b >= 1."""
    if b < 1:
        raise ValueError(f"ceil_div divisor must be positive, got {b}")
    if a < 0:
        raise ValueError(f"ceil_div numerator must be nonnegative, got {a}")
    return -(-a // b)


def _as_size(value) -> int:
    if isinstance(value, bool):
        raise InvalidInstance(f"invalid size {value!r}: booleans are not sizes")
    try:
        n = operator.index(value)
    except TypeError:
        raise InvalidInstance(f"invalid size {value!r}: not an integer") from None
    if n < 1:
        raise InvalidInstance(f"invalid size {n}: partite sets must be nonempty")
    return n


@dataclass(frozen=True)
class Instance:
    """Partite-set sizes of K_{n_1,...,n_k}, kept in non-decreasing order."""

    sizes: tuple[int, ...]
    total: int = field(init=False)

    def __post_init__(self):
        sizes = tuple(sorted(_as_size(n) for n in self.sizes))
        if not sizes:
            raise InvalidInstance("an instance needs at least one partite set")
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "total", sum(sizes))

    @property
    def k(self) -> int:
        return len(self.sizes)

    def __str__(self):
        return "K(" + ",".join(map(str, self.sizes)) + ")"


def make_instance(sizes: Iterable[int]) -> Instance:
    if isinstance(sizes, (str, bytes)):
        raise InvalidInstance("sizes must be a sequence of integers, not a string")
    return Instance(tuple(sizes))


@dataclass(frozen=True)
class ClassProfile:
    """Colour-class counts for an equitable r-colouring.

    ``b`` is ceil(N / r).  Partite set i holds ``per_part[i][0]`` classes,
    ``per_part[i][1]`` of which have size b - 1 and the rest size b.  When
    b == 1 the size-0 classes are the empty colours of an r > N colouring.
    """

    r: int
    b: int
    per_part: tuple[tuple[int, int], ...]

    def class_sizes(self, i: int) -> list[int]:
        ri, si = self.per_part[i]
        return [self.b] * (ri - si) + [self.b - 1] * si

    def validate(self, instance: Instance) -> None:
        """Raise InvalidProfile unless this profile realises ``instance``."""
        if len(self.per_part) != instance.k:
            raise InvalidProfile(
                f"profile has {len(self.per_part)} parts, instance has {instance.k}"
            )
        if self.r < 1:
            raise InvalidProfile(f"r must be positive, got {self.r}")
        if self.b != ceil_div(instance.total, self.r):
            raise InvalidProfile(
                f"b={self.b} but ceil(N/r)={ceil_div(instance.total, self.r)}"
            )
        if sum(ri for ri, _ in self.per_part) != self.r:
            raise InvalidProfile("class counts do not sum to r")
        for n, (ri, si) in zip(instance.sizes, self.per_part):
            if not 0 <= si <= ri:
                raise InvalidProfile(f"need 0 <= s_i <= r_i, got ({ri}, {si})")
            if ri * self.b - si != n:
                raise InvalidProfile(
                    f"part of size {n} is not {ri} classes of size {self.b}/{self.b - 1}"
                )


@dataclass(frozen=True)
class EquitableColoring:
    """Class sizes per partite set, plus a count of empty colour classes."""

    classes: tuple[tuple[int, ...], ...]
    empty_classes: int = 0

    def __post_init__(self):
        object.__setattr__(
            self, "classes", tuple(tuple(int(c) for c in part) for part in self.classes)
        )

    @property
    def num_classes(self) -> int:
        return sum(len(part) for part in self.classes) + self.empty_classes

    def all_sizes(self) -> list[int]:
        sizes = [c for part in self.classes for c in part]
        return sizes + [0] * self.empty_classes


@dataclass(frozen=True)
class ThresholdResult:
    d: int
    p: int
    q: int


@dataclass(frozen=True)
class FeasibilityReport:
    """Which r in [1, r_max] admit an equitable r-colouring."""

    instance: Instance
    entries: dict[int, bool]

    @property
    def feasible(self) -> list[int]:
        return sorted(r for r, ok in self.entries.items() if ok)

    @property
    def infeasible(self) -> list[int]:
        return sorted(r for r, ok in self.entries.items() if not ok)

    def __getitem__(self, r: int) -> bool:
        if r > self.instance.total:
            return True
        return self.entries[r]
