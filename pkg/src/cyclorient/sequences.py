"""Finite sequences over the cycle [n] = {0, ..., n-1} and their orientation.

Place the points 0, ..., n-1 clockwise on a circle.  A sequence of such
points is *cyclic* when at most one circular step descends (equivalently,
some rotation of it is non-decreasing) and *anti-cyclic* when at most one
circular step ascends.  A sequence with at most two distinct values is
either both or neither; three or more distinct values force exactly one of
the two, in which case we call the sequence uniquely oriented.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Orientation(Enum):
    """Four-way orientation classification of a nonempty sequence."""

    CYCLIC_ONLY = "cyclic-only"
    ANTI_CYCLIC_ONLY = "anti-cyclic-only"
    BOTH = "both"
    NEITHER = "neither"

    @property
    def admits_cyclic(self) -> bool:
        """True when the sequence is cyclic (possibly anti-cyclic as well)."""
        return self is Orientation.CYCLIC_ONLY or self is Orientation.BOTH

    @property
    def admits_anti_cyclic(self) -> bool:
        """True when the sequence is anti-cyclic (possibly cyclic as well)."""
        return self is Orientation.ANTI_CYCLIC_ONLY or self is Orientation.BOTH

    @property
    def oriented(self) -> bool:
        """Cyclic or anti-cyclic (or both)."""
        return self is not Orientation.NEITHER

    @property
    def uniquely_oriented(self) -> bool:
        """Exactly one of cyclic / anti-cyclic."""
        return self is Orientation.CYCLIC_ONLY or self is Orientation.ANTI_CYCLIC_ONLY

    def swapped(self) -> Orientation:
        """Orientation of the reversed sequence: cyclic and anti-cyclic trade places."""
        if self is Orientation.CYCLIC_ONLY:
            return Orientation.ANTI_CYCLIC_ONLY
        if self is Orientation.ANTI_CYCLIC_ONLY:
            return Orientation.CYCLIC_ONLY
        return self


@dataclass(frozen=True)
class Seq:
    """A finite sequence of values drawn from [n], with the cycle size recorded.

    The empty sequence is a valid value but has no orientation; the
    orientation predicates below reject it.
    """

    n: int
    items: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"cycle size must be positive, got n={self.n}")
        object.__setattr__(self, "items", tuple(self.items))
        for v in self.items:
            if not 0 <= v < self.n:
                raise ValueError(f"value {v} outside [0, {self.n})")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> Seq:
        """Parse a comma-separated value list, e.g. "0,1,0,1".

        When ``n`` is omitted it defaults to 1 + max(value).
        """
        text = text.strip()
        items = tuple(int(part) for part in text.split(",")) if text else ()
        if n is None:
            n = max(items) + 1 if items else 1
        return cls(n, items)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, i: int) -> int:
        return self.items[i]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.items)


def _require_nonempty(s: Seq) -> None:
    if not s.items:
        raise ValueError("empty sequence has no orientation")


def circular_descents(s: Seq) -> int:
    """Number of positions i with item[i] > item[i+1], indices wrapping around."""
    _require_nonempty(s)
    items = s.items
    t = len(items)
    return sum(items[i] > items[(i + 1) % t] for i in range(t))


def circular_ascents(s: Seq) -> int:
    """Number of positions i with item[i] < item[i+1], indices wrapping around."""
    _require_nonempty(s)
    items = s.items
    t = len(items)
    return sum(items[i] < items[(i + 1) % t] for i in range(t))


def is_cyclic(s: Seq) -> bool:
    """At most one circular descent; equivalently some rotation is non-decreasing."""
    return circular_descents(s) <= 1


def is_anti_cyclic(s: Seq) -> bool:
    """At most one circular ascent; equivalently some rotation is non-increasing."""
    return circular_ascents(s) <= 1


def orientation(s: Seq) -> Orientation:
    """Classify a nonempty sequence as cyclic-only, anti-cyclic-only, both or neither."""
    _require_nonempty(s)
    items = s.items
    t = len(items)
    descents = 0
    ascents = 0
    for i in range(t):
        a, b = items[i], items[(i + 1) % t]
        if a > b:
            descents += 1
        elif a < b:
            ascents += 1
    cyclic = descents <= 1
    anti = ascents <= 1
    if cyclic and anti:
        return Orientation.BOTH
    if cyclic:
        return Orientation.CYCLIC_ONLY
    if anti:
        return Orientation.ANTI_CYCLIC_ONLY
    return Orientation.NEITHER


def cyclic_variant(s: Seq, i: int) -> Seq:
    """The rotation of ``s`` starting at position i+1 (mod length).

    Rotations never change the orientation classification.
    """
    t = len(s.items)
    if not 0 <= i < t:
        raise IndexError(f"rotation index {i} outside [0, {t})")
    start = (i + 1) % t
    return Seq(s.n, s.items[start:] + s.items[:start])


def reverse(s: Seq) -> Seq:
    """The sequence read backwards; swaps cyclic-only and anti-cyclic-only."""
    return Seq(s.n, s.items[::-1])


def distinct_count(s: Seq) -> int:
    """Number of distinct values occurring in the sequence."""
    return len(set(s.items))


def same_orientation(s: Seq, t: Seq) -> bool:
    """Whether two uniquely oriented sequences carry the same orientation.

    The relation is only defined on uniquely oriented sequences; anything
    classified both or neither is rejected.
    """
    tag_s = orientation(s)
    tag_t = orientation(t)
    if not tag_s.uniquely_oriented:
        raise ValueError(f"first sequence is not uniquely oriented (tag {tag_s.value})")
    if not tag_t.uniquely_oriented:
        raise ValueError(f"second sequence is not uniquely oriented (tag {tag_t.value})")
    return tag_s is tag_t
