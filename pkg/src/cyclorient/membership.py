"""Membership tests for the orientation classes of self-maps of [n].

A map is *orientation-preserving* when its image sequence (0a, 1a, ...,
(n-1)a) is cyclic, *orientation-reversing* when that sequence is
anti-cyclic, and belongs to the combined class when it is either.  Besides
this O(n) definitional scan, two independent characterizations are
implemented: one quantifying over distinct triples, one over oriented
quadruples.  ``cross_check`` runs everything (including the chord test from
:mod:`cyclorient.chords`) and reports any disagreement.

The triple characterization has a genuine edge case: a map of rank <= 2
sends every triple to a both-oriented image, so it passes the triple tests
even when it is not a member (the alternating map 0,1,0,1 is the smallest
example).  The refined equivalence that actually holds for all ranks is

    triple test passes  <=>  member  or  rank <= 2

and disagreements of the literal statement in the rank <= 2 regime are
reported as sanctioned rather than hidden.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .mappings import Mapping
from .sequences import Orientation, Seq, orientation

TRIPLE_MODES = ("preserve", "reverse")


@dataclass(frozen=True)
class MembershipReport:
    """Definitional membership flags plus image-sequence metadata."""

    in_op: bool
    in_or: bool
    in_p: bool
    image_size: int
    image_orientation: Orientation


@dataclass(frozen=True)
class Disagreement:
    """One disagreement between two membership routes.

    ``sanctioned`` marks the known rank <= 2 exemption of the literal
    triple statement; anything unsanctioned would be a genuine bug.
    """

    claim: str
    detail: str
    sanctioned: bool


@dataclass(frozen=True)
class ConsistencyReport:
    """Agreement surface of all four membership tests for one map."""

    definitional: MembershipReport
    triple_op: bool
    triple_or: bool
    quad_p: bool
    chord_p: bool
    discrepancies: tuple[Disagreement, ...]

    @property
    def unsanctioned(self) -> tuple[Disagreement, ...]:
        return tuple(d for d in self.discrepancies if not d.sanctioned)

    @property
    def consistent(self) -> bool:
        return not self.unsanctioned


def image_sequence(m: Mapping) -> Seq:
    """The sequence (0a, 1a, ..., (n-1)a) whose orientation defines membership."""
    return Seq(m.n, m.images)


def classify(m: Mapping) -> MembershipReport:
    """Definitional membership test via the orientation of the image sequence."""
    tag = orientation(image_sequence(m))
    in_op = tag.admits_cyclic
    in_or = tag.admits_anti_cyclic
    return MembershipReport(
        in_op=in_op,
        in_or=in_or,
        in_p=in_op or in_or,
        image_size=len(set(m.images)),
        image_orientation=tag,
    )


def triple_test(m: Mapping, mode: str) -> bool:
    """Whether every pairwise-distinct cyclic triple keeps (mode "preserve")
    or flips (mode "reverse") its orientation under the map.

    Triples with repeated entries impose no constraint (their images have at
    most two distinct values, hence are both-oriented) and are skipped.
    Rotating a triple changes neither its own orientation nor its image's,
    so the sorted representative i < j < k covers all cyclic triples, and
    anti-cyclic sources are covered by the reversed relabelling.
    """
    if mode not in TRIPLE_MODES:
        raise ValueError(f"mode must be one of {TRIPLE_MODES}, got {mode!r}")
    imgs = m.images
    if mode == "preserve":
        for i, j, k in itertools.combinations(range(m.n), 3):
            w, x, y = imgs[i], imgs[j], imgs[k]
            if (w > x) + (x > y) + (y > w) >= 2:
                return False
    else:
        for i, j, k in itertools.combinations(range(m.n), 3):
            w, x, y = imgs[i], imgs[j], imgs[k]
            if (w < x) + (x < y) + (y < w) >= 2:
                return False
    return True


@lru_cache(maxsize=None)
def oriented_quadruples(n: int) -> tuple[tuple[int, int, int, int], ...]:
    """All (a, b, c, d) in [n]^4 whose orientation is not neither, in
    lexicographic order.  Cached per n; repeated entries included."""
    return tuple(
        quad
        for quad in itertools.product(range(n), repeat=4)
        if orientation(Seq(n, quad)).oriented
    )


def quad_test(m: Mapping) -> bool:
    """Whether every oriented quadruple has an oriented image.

    Unlike the triple tests this characterizes membership in the combined
    class exactly, with no rank caveat.
    """
    imgs = m.images
    for a, b, c, d in oriented_quadruples(m.n):
        w, x, y, z = imgs[a], imgs[b], imgs[c], imgs[d]
        if (w > x) + (x > y) + (y > z) + (z > w) >= 2 and (w < x) + (x < y) + (
            y < z
        ) + (z < w) >= 2:
            return False
    return True


def cross_check(m: Mapping) -> ConsistencyReport:
    """Run all four membership tests and record every disagreement.

    Expected agreements: quadruple test == chord test == definitional
    combined membership, always; triple tests == definitional flags whenever
    the rank is at least 3.  Rank <= 2 triple disagreements are recorded as
    sanctioned.
    """
    from .chords import has_chord_property

    report = classify(m)
    triple_op = triple_test(m, "preserve")
    triple_or = triple_test(m, "reverse")
    quad_p = quad_test(m)
    chord_p = has_chord_property(m).holds

    found: list[Disagreement] = []
    low_rank = report.image_size <= 2
    if triple_op != report.in_op:
        found.append(
            Disagreement(
                claim="triple-preserve-vs-definitional",
                detail=(
                    f"triple test (preserve) = {triple_op} but in_op = {report.in_op};"
                    f" image size {report.image_size}"
                    + (" <= 2: sanctioned exemption" if low_rank else "")
                ),
                sanctioned=low_rank,
            )
        )
    if triple_or != report.in_or:
        found.append(
            Disagreement(
                claim="triple-reverse-vs-definitional",
                detail=(
                    f"triple test (reverse) = {triple_or} but in_or = {report.in_or};"
                    f" image size {report.image_size}"
                    + (" <= 2: sanctioned exemption" if low_rank else "")
                ),
                sanctioned=low_rank,
            )
        )
    if quad_p != report.in_p:
        found.append(
            Disagreement(
                claim="quad-vs-definitional",
                detail=f"quad test = {quad_p} but in_p = {report.in_p}",
                sanctioned=False,
            )
        )
    if chord_p != quad_p:
        found.append(
            Disagreement(
                claim="chord-vs-quad",
                detail=f"chord property = {chord_p} but quad test = {quad_p}",
                sanctioned=False,
            )
        )
    return ConsistencyReport(
        definitional=report,
        triple_op=triple_op,
        triple_or=triple_or,
        quad_p=quad_p,
        chord_p=chord_p,
        discrepancies=tuple(found),
    )
