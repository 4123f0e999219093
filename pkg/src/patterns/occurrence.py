from __future__ import annotations

from itertools import combinations
from typing import FrozenSet, List, Sequence, Tuple

from errors import DimensionMismatch, IndexOutOfRange
from patterns.mesh import MarkedSMP, MeshPattern
from patterns.smp import SMP
from perms.multiperm import MultiPerm, Point


def sign_mask(target: Point, origin: Point) -> int:
    """Mask of sgn(target − origin): bit r is set when coordinate r decreases."""
    mask = 0
    for r, (a, b) in enumerate(zip(target, origin)):
        if a < b:
            mask |= 1 << r
    return mask


def is_occurrence_smp(perm: MultiPerm, i: int, pattern: SMP) -> bool:
    _check_dims(perm.d, pattern.d)
    _check_index(perm, i)
    return _is_occurrence_points(perm.elements(), i - 1, pattern.masks)


def blocking_elements(perm: MultiPerm, i: int, pattern: SMP) -> List[int]:
    """Indices j whose sign vector relative to element i lies in the pattern."""
    _check_dims(perm.d, pattern.d)
    _check_index(perm, i)
    points = perm.elements()
    origin = points[i - 1]
    return [
        j + 1
        for j, point in enumerate(points)
        if j != i - 1 and sign_mask(point, origin) in pattern.masks
    ]


def occurrences(perm: MultiPerm, pattern: SMP) -> List[int]:
    _check_dims(perm.d, pattern.d)
    points = perm.elements()
    return [i + 1 for i in range(len(points)) if _is_occurrence_points(points, i, pattern.masks)]


def count_occurrences_smp(perm: MultiPerm, pattern: SMP) -> int:
    return len(occurrences(perm, pattern))


def avoids(perm: MultiPerm, pattern: SMP) -> bool:
    _check_dims(perm.d, pattern.d)
    points = perm.elements()
    return not any(_is_occurrence_points(points, i, pattern.masks) for i in range(len(points)))


def avoids_points(points: Sequence[Point], masks: FrozenSet[int]) -> bool:
    for i in range(len(points)):
        if _is_occurrence_points(points, i, masks):
            return False
    return True


def count_occurrences_mesh(perm: MultiPerm, pattern: MeshPattern) -> int:
    _check_dims(perm.d, pattern.d)
    return count_mesh_points(perm.elements(), pattern)


def count_mesh_points(points: Sequence[Point], pattern: MeshPattern) -> int:
    k = pattern.k
    if k > len(points):
        return 0
    target = _rank_rows(pattern.T.elements())
    total = 0
    for chosen in combinations(range(len(points)), k):
        selected = [points[index] for index in chosen]
        if _rank_rows(selected) != target:
            continue
        if pattern.shading and _hits_shading(points, chosen, selected, pattern.shading):
            continue
        total += 1
    return total


def is_occurrence_marked(perm: MultiPerm, i: int, pattern: MarkedSMP) -> bool:
    _check_dims(perm.d, pattern.d)
    _check_index(perm, i)
    return _is_marked_points(perm.elements(), i - 1, pattern)


def count_occurrences_marked(perm: MultiPerm, pattern: MarkedSMP) -> int:
    _check_dims(perm.d, pattern.d)
    return count_marked_points(perm.elements(), pattern)


def count_marked_points(points: Sequence[Point], pattern: MarkedSMP) -> int:
    return sum(1 for i in range(len(points)) if _is_marked_points(points, i, pattern))


def _is_occurrence_points(points: Sequence[Point], i: int, masks: FrozenSet[int]) -> bool:
    origin = points[i]
    for j, point in enumerate(points):
        if j != i and sign_mask(point, origin) in masks:
            return False
    return True


def _is_marked_points(points: Sequence[Point], i: int, pattern: MarkedSMP) -> bool:
    origin = points[i]
    tally = {mask: 0 for mask in pattern.lower_bounds}
    for j, point in enumerate(points):
        if j == i:
            continue
        mask = sign_mask(point, origin)
        if mask in pattern.shaded_masks:
            return False
        if mask in tally:
            tally[mask] += 1
    return all(tally[mask] >= needed for mask, needed in pattern.lower_bounds.items())


def _rank_rows(points: Sequence[Point]) -> Tuple[Tuple[int, ...], ...]:
    ranks = []
    for coordinate in zip(*points):
        order = sorted(coordinate)
        ranks.append(tuple(order.index(value) for value in coordinate))
    return tuple(ranks)


def _hits_shading(
    points: Sequence[Point],
    chosen: Tuple[int, ...],
    selected: List[Point],
    shading: FrozenSet[Tuple[int, ...]],
) -> bool:
    members = set(chosen)
    for r, point in enumerate(points):
        if r in members:
            continue
        for cell in shading:
            if all(_in_band(point[j], selected, c, j) for j, c in enumerate(cell)):
                return True
    return False


def _in_band(value: int, selected: List[Point], c: int, j: int) -> bool:
    """Strictly between the coordinate-j values of occurrence elements c and c+1.

    Elements are taken in position order; element 0 sits below everything and
    element k+1 above, as with the positions i_0 = 0 and i_{k+1} = infinity.
    """
    lower = selected[c - 1][j] if c > 0 else None
    upper = selected[c][j] if c < len(selected) else None
    if lower is None and upper is None:
        return True
    if lower is None:
        return value < upper
    if upper is None:
        return value > lower
    return min(lower, upper) < value < max(lower, upper)


def _check_dims(perm_d: int, pattern_d: int) -> None:
    if perm_d != pattern_d:
        raise DimensionMismatch(f"permutation has d={perm_d}, pattern has d={pattern_d}")


def _check_index(perm: MultiPerm, i: int) -> None:
    if not 1 <= i <= perm.n:
        raise IndexOutOfRange(f"element {i} outside 1..{perm.n}")
