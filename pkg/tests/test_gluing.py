"""Explicit gluing words: surfaces, canonical forms, exhaustive counts."""

import random

import pytest

from gluecount import (
    CapExceededError,
    DomainError,
    GluingWord,
    ParityError,
    SurfaceSignature,
    canonicalize,
    count_brute,
    count_closed,
    enumerate_classes,
    glue,
    iter_words,
)


def word(text):
    return GluingWord.from_letters(text)


def is_least_rotation(cycle):
    return all(cycle <= cycle[i:] + cycle[:i] for i in range(len(cycle)))


def test_word_validation():
    with pytest.raises(DomainError, match="at least one slot"):
        GluingWord((), ())
    with pytest.raises(DomainError, match="labels has"):
        GluingWord((-1,), (1, 2))
    with pytest.raises(DomainError, match="positive label"):
        GluingWord((-1,), (0,))
    with pytest.raises(DomainError, match="appears twice"):
        GluingWord((-1, -1), (3, 3))
    with pytest.raises(DomainError, match="out-of-range"):
        GluingWord((5, 0), (0, 0))
    with pytest.raises(DomainError, match="pair with itself"):
        GluingWord((0, 1), (0, 0))
    with pytest.raises(DomainError, match="do not pair mutually"):
        GluingWord((1, 0, 3, 3), (0, 0, 0, 0))
    with pytest.raises(DomainError, match="carry label 0"):
        GluingWord((1, 0), (5, 0))


def test_from_letters():
    w = word("a,x,a,y")
    assert w.pairing == (2, -1, 0, -1)
    assert w.labels == (0, 1, 0, 2)
    assert word("a x a y") == w
    with pytest.raises(DomainError, match="appears 3 times"):
        word("a,a,a,x")
    with pytest.raises(DomainError, match="empty"):
        word("  ")


def test_glue_torus():
    s = glue(word("a,b,a,b"))
    assert s.genus == 1
    assert s.euler_char == 0
    assert s.boundary_cycles == ()
    assert s.puncture_count == 1
    assert s.vertex_classes == ((0, 1, 2, 3),)
    assert s.boundary_profile == (0,)


def test_glue_cylinder():
    s = glue(word("a,x,a,y"))
    assert s.genus == 0
    assert s.euler_char == 0
    assert s.boundary_cycles == ((1,), (2,))
    assert s.puncture_count == 0
    assert s.boundary_profile == (1, 1)


def test_glue_disc_with_interior_point():
    s = glue(word("a,a,x,y"))
    assert s.genus == 0
    assert s.euler_char == 1
    assert s.boundary_cycles == ((1, 2),)
    assert s.puncture_count == 1
    assert s.boundary_profile == (2, 0)


def test_glue_sphere():
    s = glue(word("a,a"))
    assert s.genus == 0
    assert s.euler_char == 2
    assert s.boundary_cycles == ()
    assert s.puncture_count == 2
    assert s.boundary_profile == (0, 0)


def test_glue_free_one_gon_is_a_disc():
    s = glue(GluingWord((-1,), (1,)))
    assert s.genus == 0
    assert s.euler_char == 1
    assert s.boundary_cycles == ((1,),)
    assert s.puncture_count == 0


def label_runs(n):
    for free in range(n % 2, n + 1, 2):
        yield tuple(range(1, free + 1))


def test_every_small_word_builds_a_consistent_surface():
    for n in range(1, 7):
        for labels in label_runs(n):
            for w in iter_words(n, labels):
                s = glue(w)
                edge_total = sum(s.boundary_profile)
                holes = s.boundary_count + s.puncture_count
                assert edge_total + 4 * s.genus + 2 * holes - 2 == n
                assert s.euler_char == 2 - 2 * s.genus - s.boundary_count
                assert s.boundary_cycles == tuple(sorted(s.boundary_cycles))
                for cycle in s.boundary_cycles:
                    assert is_least_rotation(cycle)


def test_rotation_identity_and_step():
    w = word("a,x,a,y")
    assert w.rotated(0) == w
    assert w.rotated(4) == w
    assert w.rotated(1).pairing == (-1, 3, -1, 1)
    assert w.rotated(1).labels == (1, 0, 2, 0)


def test_rotation_never_changes_class():
    rng = random.Random(20250819)
    words = list(iter_words(8, (1, 2)))
    for w in rng.sample(words, 40):
        spun = w.rotated(rng.randrange(1, 8))
        assert canonicalize(spun) == canonicalize(w)
        a, b = glue(w), glue(spun)
        assert (a.genus, a.puncture_count, a.boundary_cycles) == (
            b.genus,
            b.puncture_count,
            b.boundary_cycles,
        )


def test_canonical_renames_pairs_but_not_labels():
    assert canonicalize(word("b,a,b,a")) == canonicalize(word("a,b,a,b"))
    assert canonicalize(word("a,a,b,b")) == canonicalize(word("b,b,a,a"))
    # Swapping which label sits where is a genuinely different marked surface.
    flipped = GluingWord((1, 0, -1, -1), (0, 0, 2, 1))
    assert canonicalize(word("a,a,x,y")) != canonicalize(flipped)
    assert canonicalize(word("a,b,a,b")) != canonicalize(word("a,a,b,b"))


def test_canonical_text():
    assert canonicalize(word("a,b,a,b")).text() == "a,b,a,b"
    assert canonicalize(word("a,x,a,y")).text() == "a,1,a,2"
    assert canonicalize(word("a,a,x,y")).text() == "a,a,1,2"
    assert canonicalize(word("x,a,a,y")).text() == "a,a,2,1"


def test_canonical_label_encoding_limit():
    with pytest.raises(DomainError, match="too large"):
        canonicalize(GluingWord((-1, -1), (300, 301)))


def test_enumeration_parity_and_label_checks():
    with pytest.raises(ParityError):
        list(iter_words(3))
    with pytest.raises(ParityError):
        list(iter_words(4, (1,)))
    with pytest.raises(DomainError, match="distinct"):
        list(iter_words(4, (1, 1)))
    with pytest.raises(DomainError, match="positive"):
        list(iter_words(4, (0, 1)))
    with pytest.raises(DomainError, match="cannot fit"):
        list(iter_words(2, (1, 2, 3)))
    with pytest.raises(DomainError, match="size must be"):
        list(iter_words(0))


def test_enumerate_two_gon():
    classes = enumerate_classes(2)
    assert len(classes) == 1
    surface = classes[0][1]
    assert (surface.genus, surface.puncture_count) == (0, 2)


def test_enumerate_closed_square():
    # Three raw pairings of four edges fall into two rotation classes:
    # the torus word and the sphere word (its two variants are rotations).
    classes = enumerate_classes(4)
    assert len(classes) == 2
    by_genus = {s.genus: s for _, s in classes}
    assert by_genus[1].puncture_count == 1
    assert by_genus[0].puncture_count == 3


def test_enumerate_square_with_two_labels():
    # 12 raw words: labels adjacent (two inequivalent label orders) or
    # opposite (one class; the swap is a half-turn).
    assert sum(1 for _ in iter_words(4, (1, 2))) == 12
    classes = enumerate_classes(4, (1, 2))
    assert len(classes) == 3
    cylinders = [s for _, s in classes if s.boundary_count == 2]
    assert len(cylinders) == 1
    assert cylinders[0].boundary_cycles == ((1,), (2,))
    discs = [s for _, s in classes if s.boundary_count == 1]
    assert len(discs) == 2
    assert all(s.boundary_cycles == ((1, 2),) and s.puncture_count == 1 for s in discs)


def test_enumerate_pentagon_single_label():
    # 15 raw words, every orbit of size 5: one handle class and two
    # sphere-with-extra-punctures classes.
    assert sum(1 for _ in iter_words(5, (1,))) == 15
    classes = enumerate_classes(5, (1,))
    assert len(classes) == 3
    genus_counts = sorted(s.genus for _, s in classes)
    assert genus_counts == [0, 0, 1]


def test_count_brute_hand_values():
    assert count_brute(SurfaceSignature(0, (1, 1))) == 1
    assert count_brute(SurfaceSignature(1, (1,))) == 1
    assert count_brute(SurfaceSignature(0, (2, 0))) == 2
    assert count_brute(SurfaceSignature(0, (2, 1))) == 2
    assert count_brute(SurfaceSignature(2, (1,))) == 21


def test_count_brute_matches_formula_on_a_sample():
    for sig in [
        SurfaceSignature(0, (3, 2)),
        SurfaceSignature(1, (2, 0)),
        SurfaceSignature(0, (1, 1, 1)),
        SurfaceSignature(1, (1, 0)),
    ]:
        assert count_brute(sig) == count_closed(sig)


def test_count_brute_cap():
    with pytest.raises(CapExceededError):
        count_brute(SurfaceSignature(3, (3,)))
    with pytest.raises(CapExceededError):
        count_brute(SurfaceSignature(0, (4, 4)), cap=7)
