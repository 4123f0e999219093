from __future__ import annotations

import random
from itertools import permutations

import pytest

from avoidance.construct import build_avoider
from avoidance.rank import (
    INFINITE_RANK,
    AvoidabilityClass,
    avoidability_of_union_table,
    avoidable,
    brute_force_rank,
    classify,
    is_strongly_unavoidable,
    minimum_cover,
    rank,
)
from enumeration.distribution import count_avoiders
from errors import CapacityExceeded
from patterns.occurrence import avoids
from patterns.pattern_text import parse_smp
from patterns.smp import (
    SMP,
    SignVector,
    all_patterns,
    complement_row_p,
    empty_pattern,
    full_pattern,
    hyperplane_core,
    is_subset,
    make_smp,
    permute_rows,
    union,
)

FIVE_ROW = make_smp(["++-++", "-+--+", "++++-"])

CLASSIFIED = [
    ("+-,-+", AvoidabilityClass(True, 2)),
    ("++,--", AvoidabilityClass(True, 2)),
    ("++,+-", AvoidabilityClass(False)),
    ("++-,+-+,-++", AvoidabilityClass(True, 3)),
    ("+++,---,+-+", AvoidabilityClass(True, 2)),
]


def random_pattern(rng, d, max_columns):
    vectors = rng.sample(range(2 ** d), rng.randint(1, min(max_columns, 2 ** d)))
    return SMP(d=d, columns=tuple(SignVector.from_mask(mask, d) for mask in vectors))


@pytest.mark.parametrize("text, expected", CLASSIFIED)
def test_classify_examples(text, expected):
    assert classify(parse_smp(text)) == expected


def test_five_row_pattern_is_unavoidable():
    # row 1 never shows a minus
    assert not avoidable(FIVE_ROW)
    assert rank(FIVE_ROW) == INFINITE_RANK
    assert minimum_cover(FIVE_ROW) is None
    assert classify(FIVE_ROW).label == "StronglyUnavoidable"


def test_empty_and_full():
    assert rank(empty_pattern(3)) == INFINITE_RANK
    assert rank(full_pattern(3)) == 2
    assert classify(parse_smp("+-,-+")).label == "Avoidable(2)"
    assert classify(parse_smp("+-,-+")).to_dict() == {"avoidable": True, "rank": 2}


def test_cover_is_a_minimal_avoidable_subset():
    pattern = parse_smp("++-,+-+,-++,+++")
    cover = minimum_cover(pattern)
    assert len(cover) == 3
    assert avoidable(SMP(d=3, columns=cover))
    assert set(cover) <= set(pattern.columns)


def test_rank_matches_brute_force():
    rng = random.Random(1234)
    for _ in range(200):
        pattern = random_pattern(rng, rng.randint(2, 6), 12)
        assert rank(pattern) == brute_force_rank(pattern)


def test_solver_handles_wide_patterns():
    rng = random.Random(99)
    for _ in range(20):
        pattern = random_pattern(rng, 8, 60)
        value = rank(pattern)
        if value != INFINITE_RANK:
            assert 2 <= value <= 8 + 1
            assert avoidable(SMP(d=8, columns=minimum_cover(pattern)))


def test_capacity_limit():
    with pytest.raises(CapacityExceeded):
        minimum_cover(SMP(d=25, columns=(SignVector("+" * 25),)))


def test_hyperplane_patterns():
    core = hyperplane_core(4, 3)
    # row 3 is constant, so the core stays unavoidable
    assert is_strongly_unavoidable(core)
    assert classify(core) == AvoidabilityClass(False)
    assert not is_strongly_unavoidable(union(core, make_smp(["----"])))
    assert classify(union(core, make_smp(["----"]))) == AvoidabilityClass(True, 2)
    assert classify(full_pattern(4)) == AvoidabilityClass(True, 2)


def test_rank_is_invariant_under_symmetry():
    rng = random.Random(7)
    for _ in range(50):
        pattern = random_pattern(rng, 4, 8)
        expected = rank(pattern)
        for i in range(1, 5):
            assert rank(complement_row_p(pattern, i)) == expected
        for tau in list(permutations(range(1, 5)))[::5]:
            assert rank(permute_rows(pattern, tau)) == expected


def test_union_table_in_the_plane():
    assert avoidability_of_union_table(2) == [
        ("A", "A", "A", "I"),
        ("A", "U", "A", "U"),
        ("U", "U", "I", "U"),
    ]


def test_avoidability_is_monotone():
    patterns = list(all_patterns(3))
    for small in patterns[::9]:
        for large in patterns[::7]:
            if is_subset(small, large) and avoidable(small):
                assert avoidable(large)
                assert rank(large) <= rank(small)


def test_avoider_counts_grow_with_the_pattern():
    for n in range(2, 6):
        counts = {pattern: count_avoiders(pattern, n) for pattern in all_patterns(2)}
        for small, small_count in counts.items():
            for large, large_count in counts.items():
                if is_subset(small, large):
                    assert large_count >= small_count
        assert counts[full_pattern(2)] >= counts[parse_smp("+-,-+")]


@pytest.mark.slow
@pytest.mark.parametrize("d", [2, 3])
def test_avoidability_dichotomy(d, engine):
    for pattern in all_patterns(d):
        if avoidable(pattern):
            r = rank(pattern)
            for n in range(1, r):
                assert count_avoiders(pattern, n, engine) == 0
            for n in range(r, r + 4):
                assert avoids(build_avoider(pattern, n), pattern)
            assert count_avoiders(pattern, r, engine) > 0
        else:
            assert all(count_avoiders(pattern, n, engine) == 0 for n in range(1, 7 if d == 2 else 5))
