"""Chord intersection: combinatorial predicate vs exact-geometry oracle."""

import itertools
import random

import pytest

from cyclorient import (
    Chord,
    Mapping,
    chords_intersect,
    classify,
    enumerate_all,
    has_chord_property,
    image_chord,
    quad_test,
)


def test_chord_normalization_and_parse():
    c = Chord(5, 4, 1)
    assert (c.p, c.q) == (1, 4)
    assert str(c) == "1-4"
    assert Chord.parse("3-0", 4) == Chord(4, 0, 3)
    assert Chord(4, 2, 2).p == Chord(4, 2, 2).q == 2
    with pytest.raises(ValueError):
        Chord(4, 0, 4)
    with pytest.raises(ValueError):
        Chord(0, 0, 0)
    with pytest.raises(ValueError):
        Chord.parse("1:3", 4)


def test_intersection_examples_both_methods():
    cases = [
        (4, (1, 3), (0, 2), True),
        (4, (0, 2), (0, 3), True),
        (4, (0, 1), (2, 3), False),
        (5, (2, 2), (0, 3), False),
    ]
    for n, (a, c), (b, d), expected in cases:
        first, second = Chord(n, a, c), Chord(n, b, d)
        assert chords_intersect(first, second) == expected
        assert chords_intersect(first, second, "geometric") == expected
    with pytest.raises(ValueError):
        chords_intersect(Chord(4, 0, 1), Chord(5, 0, 1))
    with pytest.raises(ValueError):
        chords_intersect(Chord(4, 0, 1), Chord(4, 2, 3), "psychic")


def test_one_point_chords():
    # A point meets itself and any chord ending at it; a circle point is
    # never on a chord between two other circle points.
    for method in ("combinatorial", "geometric"):
        assert chords_intersect(Chord(6, 2, 2), Chord(6, 2, 2), method)
        assert not chords_intersect(Chord(6, 2, 2), Chord(6, 5, 5), method)
        assert chords_intersect(Chord(6, 2, 2), Chord(6, 2, 5), method)
        assert not chords_intersect(Chord(6, 2, 2), Chord(6, 0, 4), method)


def test_common_endpoint_always_intersects():
    for n in (3, 4, 5):
        for a, b, c in itertools.product(range(n), repeat=3):
            assert chords_intersect(Chord(n, a, b), Chord(n, a, c))
            assert chords_intersect(Chord(n, a, b), Chord(n, a, c), "geometric")
    # ... and stays intersecting under every map, via the common image point.
    for m in enumerate_all(4):
        for a, b, c in itertools.product(range(4), repeat=3):
            first = image_chord(m, Chord(4, a, b))
            second = image_chord(m, Chord(4, a, c))
            assert chords_intersect(first, second)


def test_symmetry_invariance():
    # Swapping endpoints within a chord or swapping the chords never changes
    # the verdict, for either method.
    for n in (2, 3, 4, 5):
        for a, b, c, d in itertools.product(range(n), repeat=4):
            for method in ("combinatorial", "geometric"):
                base = chords_intersect(Chord(n, a, c), Chord(n, b, d), method)
                assert base == chords_intersect(Chord(n, c, a), Chord(n, b, d), method)
                assert base == chords_intersect(Chord(n, a, c), Chord(n, d, b), method)
                assert base == chords_intersect(Chord(n, b, d), Chord(n, a, c), method)


def test_methods_agree_up_to_n8():
    # The acceptance suite extends this differential check to n = 12.
    for n in range(1, 9):
        for a, b, c, d in itertools.product(range(n), repeat=4):
            first, second = Chord(n, a, c), Chord(n, b, d)
            assert chords_intersect(first, second) == chords_intersect(
                first, second, "geometric"
            ), (n, a, b, c, d)


def test_image_chord():
    m = Mapping.parse("0,1,3,2")
    assert image_chord(m, Chord(4, 1, 3)) == Chord(4, 1, 2)
    assert image_chord(m, Chord(4, 0, 2)) == Chord(4, 0, 3)
    with pytest.raises(ValueError):
        image_chord(m, Chord(5, 0, 2))


def test_has_chord_property_examples():
    res = has_chord_property(Mapping.parse("0,1,3,2"))
    assert not res.holds and not bool(res)
    first, second = res.counterexample
    assert {(first.p, first.q), (second.p, second.q)} == {(0, 2), (1, 3)}
    m = Mapping.parse("0,1,3,2")
    assert not chords_intersect(image_chord(m, first), image_chord(m, second))

    assert has_chord_property(Mapping.parse("0,0,3,2")).holds
    assert has_chord_property(Mapping(4, tuple(range(4)))).holds
    assert has_chord_property(Mapping(4, tuple(range(4)))).counterexample is None


def test_has_chord_property_first_violation_is_lexicographic():
    # For the swap map the first violating (a,b,c,d) is (0,1,2,3).
    res = has_chord_property(Mapping.parse("0,1,3,2"))
    first, second = res.counterexample
    assert (first.p, second.p, first.q, second.q) == (0, 1, 2, 3)


def test_chord_property_matches_quad_test():
    for n in (1, 2, 3, 4):
        for m in enumerate_all(n):
            assert has_chord_property(m).holds == quad_test(m), m
            assert has_chord_property(m, "geometric").holds == quad_test(m), m
    rng = random.Random(31337)
    for _ in range(150):
        m = Mapping(5, tuple(rng.randrange(5) for _ in range(5)))
        assert has_chord_property(m).holds == quad_test(m) == classify(m).in_p
