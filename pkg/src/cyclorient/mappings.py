"""Total self-maps of [n]: the full transformation monoid under composition.

A map is stored as its image list, entry j being the image of j.  Maps act
on the right, so composition is left-to-right: ``compose(a, b)`` applies
``a`` first and ``b`` second.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .sequences import Seq


@dataclass(frozen=True)
class Mapping:
    """A total self-map of [n], stored as the tuple (0a, 1a, ..., (n-1)a)."""

    n: int
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"cycle size must be positive, got n={self.n}")
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.n:
            raise ValueError(
                f"image list has length {len(self.images)}, expected n={self.n}"
            )
        for v in self.images:
            if not 0 <= v < self.n:
                raise ValueError(f"image {v} outside [0, {self.n})")

    @classmethod
    def parse(cls, text: str) -> Mapping:
        """Parse a comma-separated image list, e.g. "0,1,3,2"; n is the list length."""
        images = tuple(int(part) for part in text.strip().split(","))
        return cls(len(images), images)

    def __call__(self, j: int) -> int:
        return self.images[j]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.images)


def identity(n: int) -> Mapping:
    """The identity map j -> j."""
    return Mapping(n, tuple(range(n)))


def rotation(n: int) -> Mapping:
    """The unit clockwise rotation j -> j+1 (mod n)."""
    return Mapping(n, tuple((j + 1) % n for j in range(n)))


def reversal(n: int) -> Mapping:
    """The order-reversing involution j -> n-1-j."""
    return Mapping(n, tuple(n - 1 - j for j in range(n)))


def compose(first: Mapping, second: Mapping) -> Mapping:
    """Apply ``first``, then ``second``."""
    if first.n != second.n:
        raise ValueError(f"cycle size mismatch: {first.n} vs {second.n}")
    return Mapping(first.n, tuple(map(second.images.__getitem__, first.images)))


def image_size(m: Mapping) -> int:
    """Number of distinct values the map takes (its rank)."""
    return len(set(m.images))


def apply_seq(m: Mapping, s: Seq) -> Seq:
    """Map a sequence pointwise."""
    if m.n != s.n:
        raise ValueError(f"cycle size mismatch: map has n={m.n}, sequence n={s.n}")
    return Seq(s.n, tuple(map(m.images.__getitem__, s.items)))


def mapping_count(n: int) -> int:
    """Size of the full transformation monoid on [n]."""
    return n**n


def enumerate_all(n: int, start: int = 0, stop: int | None = None) -> Iterator[Mapping]:
    """Yield every self-map of [n] in lexicographic order of image lists.

    ``start``/``stop`` select a contiguous index range, so the full
    enumeration can be split across workers; index k is the map whose image
    list is k written in base n, most significant digit first.
    """
    if n < 1:
        raise ValueError(f"cycle size must be positive, got n={n}")
    total = n**n
    if stop is None:
        stop = total
    if not 0 <= start <= stop <= total:
        raise ValueError(f"bad range [{start}, {stop}) for {total} maps")
    maps = itertools.product(range(n), repeat=n)
    for images in itertools.islice(maps, start, stop):
        yield Mapping(n, images)
