"""Chords of a circle carrying the points of [n] clockwise.

A chord joins two (possibly equal) of the n circle points; a one-point
chord is a single point.  Two intersection predicates are implemented:

* ``combinatorial`` — the chords {a, c} and {b, d} meet exactly when the
  interleaved quadruple (a, b, c, d) is oriented.  The verdict does not
  depend on how endpoints are paired off or which chord comes first; the
  test suite asserts that invariance.
* ``geometric`` — an exact oracle.  Point j is placed at integer
  coordinates (j, j*j): a strictly convex position whose hull order
  realizes the circular order of [n], so chord intersection is the same as
  on the circle.  Closed-segment intersection (endpoints and tangency
  count; degenerate point segments allowed) is decided by integer
  cross-product signs, with no floating point anywhere.  Three distinct
  placed points are never collinear, so collinear cases arise only from
  coincident labels and are handled by the on-segment checks.

``has_chord_property`` asks whether a map sends every intersecting chord
pair to an intersecting pair; this holds exactly for the maps that preserve
or reverse orientation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .mappings import Mapping
from .sequences import Seq, orientation

METHODS = ("combinatorial", "geometric")


@dataclass(frozen=True)
class Chord:
    """An unordered pair of circle points, normalized so p <= q."""

    n: int
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"cycle size must be positive, got n={self.n}")
        for v in (self.p, self.q):
            if not 0 <= v < self.n:
                raise ValueError(f"endpoint {v} outside [0, {self.n})")
        if self.p > self.q:
            p, q = self.q, self.p
            object.__setattr__(self, "p", p)
            object.__setattr__(self, "q", q)

    @classmethod
    def parse(cls, text: str, n: int) -> Chord:
        """Parse the text form "p-q", e.g. "1-3"."""
        parts = text.strip().split("-")
        if len(parts) != 2:
            raise ValueError(f"chord must look like 'p-q', got {text!r}")
        return cls(n, int(parts[0]), int(parts[1]))

    def __str__(self) -> str:
        return f"{self.p}-{self.q}"


def _cross_sign(o: tuple[int, int], a: tuple[int, int], b: tuple[int, int]) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p: tuple[int, int], q: tuple[int, int], r: tuple[int, int]) -> bool:
    # r is assumed collinear with p-q; test the bounding box.
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(
        p[1], q[1]
    )


def _segments_intersect(
    p1: tuple[int, int],
    q1: tuple[int, int],
    p2: tuple[int, int],
    q2: tuple[int, int],
) -> bool:
    """Closed-segment intersection over exact integers; degenerate segments allowed."""
    d1 = _cross_sign(p2, q2, p1)
    d2 = _cross_sign(p2, q2, q1)
    d3 = _cross_sign(p1, q1, p2)
    d4 = _cross_sign(p1, q1, q2)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True
    if d1 == 0 and _on_segment(p2, q2, p1):
        return True
    if d2 == 0 and _on_segment(p2, q2, q1):
        return True
    if d3 == 0 and _on_segment(p1, q1, p2):
        return True
    if d4 == 0 and _on_segment(p1, q1, q2):
        return True
    return False


def _place(j: int) -> tuple[int, int]:
    return (j, j * j)


def chords_intersect(first: Chord, second: Chord, method: str = "combinatorial") -> bool:
    """Whether two chords share at least one point (closed segments)."""
    if first.n != second.n:
        raise ValueError(f"cycle size mismatch: {first.n} vs {second.n}")
    if method == "combinatorial":
        quad = Seq(first.n, (first.p, second.p, first.q, second.q))
        return orientation(quad).oriented
    if method == "geometric":
        return _segments_intersect(
            _place(first.p), _place(first.q), _place(second.p), _place(second.q)
        )
    raise ValueError(f"method must be one of {METHODS}, got {method!r}")


def image_chord(m: Mapping, chord: Chord) -> Chord:
    """The chord joining the images of the endpoints."""
    if m.n != chord.n:
        raise ValueError(f"cycle size mismatch: map has n={m.n}, chord n={chord.n}")
    return Chord(chord.n, m.images[chord.p], m.images[chord.q])


@dataclass(frozen=True)
class ChordPropertyResult:
    """Outcome of the chord-preservation test, with the first failing pair."""

    holds: bool
    counterexample: tuple[Chord, Chord] | None = None

    def __bool__(self) -> bool:
        return self.holds


@lru_cache(maxsize=None)
def _pair_table(n: int, method: str) -> tuple[tuple[bool, ...], ...]:
    """Intersection verdicts for all normalized chord pairs, indexed p*n+q."""
    table = [[False] * (n * n) for _ in range(n * n)]
    for p in range(n):
        for q in range(p, n):
            left = Chord(n, p, q)
            for r in range(n):
                for s in range(r, n):
                    table[p * n + q][r * n + s] = chords_intersect(
                        left, Chord(n, r, s), method
                    )
    return tuple(tuple(row) for row in table)


@lru_cache(maxsize=None)
def _intersecting_quadruples(
    n: int, method: str
) -> tuple[tuple[int, int, int, int], ...]:
    """All (a, b, c, d) whose chords {a,c}, {b,d} intersect, in lexicographic order."""
    return tuple(
        (a, b, c, d)
        for a, b, c, d in itertools.product(range(n), repeat=4)
        if chords_intersect(Chord(n, a, c), Chord(n, b, d), method)
    )


def has_chord_property(m: Mapping, method: str = "combinatorial") -> ChordPropertyResult:
    """Whether the images of every intersecting chord pair still intersect.

    On failure the returned counterexample is the source pair of the first
    violating (a, b, c, d) in lexicographic order.
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    n = m.n
    imgs = m.images
    table = _pair_table(n, method)
    for a, b, c, d in _intersecting_quadruples(n, method):
        ia, ic = imgs[a], imgs[c]
        if ia > ic:
            ia, ic = ic, ia
        ib, id_ = imgs[b], imgs[d]
        if ib > id_:
            ib, id_ = id_, ib
        if not table[ia * n + ic][ib * n + id_]:
            return ChordPropertyResult(False, (Chord(n, a, c), Chord(n, b, d)))
    return ChordPropertyResult(True)
