from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple, Union

from errors import CapacityExceeded
from patterns.smp import SMP, SignVector, all_patterns, intersection, union

INFINITE_RANK = math.inf
MAX_DIMENSION = 24
MAX_COLUMNS = 2 ** 16

Rank = Union[int, float]


@dataclass(frozen=True)
class AvoidabilityClass:
    avoidable: bool
    rank: Optional[int] = None

    @property
    def label(self) -> str:
        return f"Avoidable({self.rank})" if self.avoidable else "StronglyUnavoidable"

    def to_dict(self) -> Dict[str, object]:
        return {"avoidable": self.avoidable, "rank": self.rank}


def avoidable(pattern: SMP) -> bool:
    """One pass over the columns keeping per-row seen-plus / seen-minus flags."""
    seen_plus = 0
    seen_minus = 0
    for column in pattern.columns:
        mask = column.mask
        seen_minus |= mask
        seen_plus |= ~mask
    full = (1 << pattern.d) - 1
    return (seen_plus & full) == full and seen_minus == full


def is_strongly_unavoidable(pattern: SMP) -> bool:
    return not avoidable(pattern)


def rank(pattern: SMP) -> Rank:
    cover = minimum_cover(pattern)
    return INFINITE_RANK if cover is None else len(cover)


def classify(pattern: SMP) -> AvoidabilityClass:
    cover = minimum_cover(pattern)
    if cover is None:
        return AvoidabilityClass(avoidable=False)
    return AvoidabilityClass(avoidable=True, rank=len(cover))


def minimum_cover(pattern: SMP) -> Optional[Tuple[SignVector, ...]]:
    """A smallest sub-pattern whose every row holds both signs, or None when none exists."""
    if pattern.d > MAX_DIMENSION or pattern.k > MAX_COLUMNS:
        raise CapacityExceeded(
            f"rank solver limited to d <= {MAX_DIMENSION} and k <= {MAX_COLUMNS}"
        )
    if is_strongly_unavoidable(pattern):
        return None
    solver = _CoverSolver(pattern)
    chosen = solver.solve()
    return tuple(sorted(pattern.columns[index] for index in chosen))


def brute_force_rank(pattern: SMP) -> Rank:
    """Exhaustive minimum over subsets; only for small k."""
    for size in range(1, pattern.k + 1):
        for subset in combinations(pattern.columns, size):
            if avoidable(SMP(d=pattern.d, columns=subset)):
                return size
    return INFINITE_RANK


def avoidability_of_union_table(d: int) -> List[Tuple[str, str, str, str]]:
    """Rows (P1, P2, P1 v P2, P1 ^ P2) over every pair of distinct d-SMPs.

    A marks avoidable, U unavoidable, and I a cell where both outcomes occur.
    """
    outcomes: Dict[Tuple[str, str], Tuple[set, set]] = {}
    patterns = list(all_patterns(d))
    letters = {pattern: _letter(pattern) for pattern in patterns}
    for first, second in combinations(patterns, 2):
        key = tuple(sorted((letters[first], letters[second])))
        joins, meets = outcomes.setdefault(key, (set(), set()))
        joins.add(_letter(union(first, second)))
        meets.add(_letter(intersection(first, second)))
    return [
        (key[0], key[1], _merge(joins), _merge(meets))
        for key, (joins, meets) in sorted(outcomes.items())
    ]


def _letter(pattern: SMP) -> str:
    return "A" if avoidable(pattern) else "U"


def _merge(letters: set) -> str:
    return letters.pop() if len(letters) == 1 else "I"


class _CoverSolver:
    """Exact set cover over the 2d items (row r needs +, row r needs -).

    Depth-first branch and bound on the uncovered item with fewest covering
    columns, seeded by a greedy upper bound, pruned by
    ceil(uncovered / best coverage) and a memo of the depth each uncovered
    state was first reached at.
    """

    def __init__(self, pattern: SMP) -> None:
        d = pattern.d
        self._universe = (1 << (2 * d)) - 1
        self._masks: List[int] = []
        for column in pattern.columns:
            items = 0
            for r, sign in enumerate(column.entries):
                items |= 1 << (2 * r + (0 if sign == "+" else 1))
            self._masks.append(items)
        self._covering: Dict[int, List[int]] = {
            item: [index for index, mask in enumerate(self._masks) if mask >> item & 1]
            for item in range(2 * d)
        }
        self._best: List[int] = []
        self._best_size = math.inf
        self._seen: Dict[int, int] = {}

    def solve(self) -> List[int]:
        self._best = self._greedy()
        self._best_size = len(self._best)
        self._dfs(0, [])
        return self._best

    def _greedy(self) -> List[int]:
        covered = 0
        chosen: List[int] = []
        while covered != self._universe:
            index = max(
                range(len(self._masks)),
                key=lambda candidate: (
                    (self._masks[candidate] & ~covered).bit_count(),
                    -candidate,
                ),
            )
            chosen.append(index)
            covered |= self._masks[index]
        return chosen

    def _dfs(self, covered: int, chosen: List[int]) -> None:
        if covered == self._universe:
            if len(chosen) < self._best_size:
                self._best = list(chosen)
                self._best_size = len(chosen)
            return
        depth = len(chosen)
        if depth + 1 >= self._best_size:
            return
        previous = self._seen.get(covered)
        if previous is not None and previous <= depth:
            return
        self._seen[covered] = depth
        uncovered = self._universe & ~covered
        best_cover = max((mask & uncovered).bit_count() for mask in self._masks)
        if depth + math.ceil(uncovered.bit_count() / best_cover) >= self._best_size:
            return
        item = min(
            (bit for bit in range(self._universe.bit_length()) if uncovered >> bit & 1),
            key=lambda bit: (len(self._covering[bit]), bit),
        )
        candidates = sorted(
            self._covering[item],
            key=lambda index: (-(self._masks[index] & uncovered).bit_count(), index),
        )
        for index in candidates:
            chosen.append(index)
            self._dfs(covered | self._masks[index], chosen)
            chosen.pop()
