from __future__ import annotations

from itertools import permutations, product

import pytest

from errors import DimensionMismatch, IndexOutOfRange
from patterns.mesh import AtLeast, MeshPattern, Shaded, make_marked, marked_from_smp, mesh_pattern_pd, smmp_all_plus
from patterns.occurrence import (
    avoids,
    blocking_elements,
    count_occurrences_marked,
    count_occurrences_mesh,
    count_occurrences_smp,
    is_occurrence_marked,
    is_occurrence_smp,
    occurrences,
)
from patterns.pattern_text import parse_smp
from patterns.smp import all_patterns, contains_minus_antipodal_subset, is_subset
from perms.multiperm import increasing, new_multiperm
from perms.perm_text import parse_multiperm

PLANAR = parse_multiperm("471569283")


def planar_perms(n):
    return [new_multiperm([list(p)]) for p in permutations(range(1, n + 1))]


def spatial_perms(n):
    rows = list(permutations(range(1, n + 1)))
    return [new_multiperm([list(a), list(b)]) for a, b in product(rows, repeat=2)]


def test_value_two_is_an_occurrence():
    assert is_occurrence_smp(PLANAR, 7, parse_smp("+-"))
    assert not is_occurrence_smp(PLANAR, 7, parse_smp("-+"))
    assert blocking_elements(PLANAR, 7, parse_smp("-+")) == [1, 2, 4, 5, 6]


def test_length_one_is_always_an_occurrence():
    single = increasing(3, 1)
    for pattern in all_patterns(3):
        assert is_occurrence_smp(single, 1, pattern)


def test_counts_and_avoidance():
    assert avoids(PLANAR, parse_smp("-+,+-"))
    for n in range(2, 7):
        assert avoids(increasing(2, n), parse_smp("--,++"))
    for perm in planar_perms(4):
        assert count_occurrences_smp(perm, parse_smp("--,+-")) >= 1
    assert occurrences(parse_multiperm("231"), parse_smp("++")) == [2, 3]


def test_dimension_and_index_checks():
    with pytest.raises(DimensionMismatch):
        count_occurrences_smp(PLANAR, parse_smp("+++"))
    with pytest.raises(IndexOutOfRange):
        is_occurrence_smp(PLANAR, 10, parse_smp("++"))


def test_inclusion_monotonicity():
    patterns = list(all_patterns(2))
    for perm in planar_perms(4) + planar_perms(5)[::7]:
        for small in patterns:
            for large in patterns:
                if not is_subset(small, large):
                    continue
                for i in range(1, perm.n + 1):
                    if is_occurrence_smp(perm, i, large):
                        assert is_occurrence_smp(perm, i, small)


@pytest.mark.slow
def test_minus_antipodal_subset_bounds_occurrences():
    perms = spatial_perms(3)
    for pattern in all_patterns(3):
        if contains_minus_antipodal_subset(pattern):
            assert all(count_occurrences_smp(perm, pattern) <= 1 for perm in perms)


def test_mesh_pd_examples():
    pd2 = mesh_pattern_pd(2)
    assert count_occurrences_mesh(parse_multiperm("231"), pd2) == 1
    assert count_occurrences_mesh(parse_multiperm("321"), pd2) == 0
    assert count_occurrences_mesh(parse_multiperm("123"), pd2) == 3
    target = parse_multiperm("2413; 1243")
    assert count_occurrences_mesh(target, MeshPattern(T=target)) == 1
    assert count_occurrences_mesh(parse_multiperm("2413; 1234"), MeshPattern(T=target)) == 0


def test_mesh_shading():
    # 12 with the box between the two points shaded: no element strictly inside
    shaded_middle = MeshPattern(T=parse_multiperm("12"), shading=frozenset({(1, 1)}))
    assert count_occurrences_mesh(parse_multiperm("123"), shaded_middle) == 2
    assert count_occurrences_mesh(parse_multiperm("132"), shaded_middle) == 2
    # everything outside shaded: only the whole permutation can match
    everything = frozenset(product(range(3), repeat=2))
    assert count_occurrences_mesh(parse_multiperm("12"), MeshPattern(T=parse_multiperm("12"), shading=everything)) == 1
    assert count_occurrences_mesh(parse_multiperm("123"), MeshPattern(T=parse_multiperm("12"), shading=everything)) == 0


def test_mesh_shading_follows_the_occurrence_order():
    # the band of a cell runs between consecutive occurrence elements, not sorted values
    t132 = parse_multiperm("132")
    perm = parse_multiperm("1342")
    assert count_occurrences_mesh(perm, MeshPattern(T=t132)) == 2
    # 3 sits between 1 and 4, blocking the occurrence at positions 1, 3, 4
    assert count_occurrences_mesh(perm, MeshPattern(T=t132, shading=frozenset({(1, 1)}))) == 1
    # past the last element the band is everything above its value
    t21 = MeshPattern(T=parse_multiperm("21"), shading=frozenset({(2, 2)}))
    assert count_occurrences_mesh(parse_multiperm("312"), t21) == 1
    assert count_occurrences_mesh(parse_multiperm("213"), t21) == 0


def test_marked_examples():
    at_least_one = smmp_all_plus(2)
    for i in range(1, 4):
        assert not is_occurrence_marked(parse_multiperm("321"), i, at_least_one)
    assert is_occurrence_marked(parse_multiperm("12"), 1, at_least_one)
    two_above = make_marked([("++", AtLeast(2)), ("+-", Shaded())])
    assert count_occurrences_marked(parse_multiperm("123"), two_above) == 1
    assert count_occurrences_marked(parse_multiperm("132"), two_above) == 1
    assert count_occurrences_marked(parse_multiperm("213"), two_above) == 0


def test_shaded_marks_agree_with_smp():
    for pattern in all_patterns(2):
        if not pattern.columns:
            continue
        marked = marked_from_smp(pattern)
        for perm in planar_perms(4):
            assert count_occurrences_marked(perm, marked) == count_occurrences_smp(perm, pattern)
