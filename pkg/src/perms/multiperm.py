from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from errors import (
    DimensionMismatch,
    DimensionTooSmall,
    IndexOutOfRange,
    NotAPermutation,
    SameIndex,
)

Point = Tuple[int, ...]


@dataclass(frozen=True)
class MultiPerm:
    """A d-dimensional permutation in canonical form.

    ``rows`` holds rows 2..d; row 1 is the identity and is never stored.
    """

    d: int
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def row(self, j: int) -> Tuple[int, ...]:
        if not 1 <= j <= self.d:
            raise IndexOutOfRange(f"row {j} outside 1..{self.d}")
        if j == 1:
            return tuple(range(1, self.n + 1))
        return self.rows[j - 2]

    def element(self, i: int) -> Point:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"element {i} outside 1..{self.n}")
        return (i,) + tuple(row[i - 1] for row in self.rows)

    def elements(self) -> List[Point]:
        return [
            (index + 1,) + tuple(row[index] for row in self.rows)
            for index in range(self.n)
        ]


def new_multiperm(
    rows: Sequence[Sequence[int]],
    first_row: Sequence[int] | None = None,
) -> MultiPerm:
    """Validate ``rows`` (rows 2..d) and return the canonical MultiPerm.

    When ``first_row`` is given the columns are sorted on it so that row 1
    becomes increasing; the other rows move in lockstep.
    """
    rows = [tuple(int(value) for value in row) for row in rows]
    if len(rows) < 1:
        raise DimensionTooSmall("a multidimensional permutation needs d >= 2")
    n = len(rows[0])
    all_rows = list(rows)
    if first_row is not None:
        all_rows = [tuple(int(value) for value in first_row)] + all_rows
    for row in all_rows:
        if len(row) != n:
            raise NotAPermutation(f"row {_text(row)} has length {len(row)}, expected {n}")
        _check_bijection(row, n)
    if first_row is None:
        return MultiPerm(d=len(rows) + 1, rows=tuple(rows))
    order = sorted(range(n), key=lambda index: all_rows[0][index])
    return MultiPerm(
        d=len(all_rows),
        rows=tuple(tuple(row[index] for index in order) for row in all_rows[1:]),
    )


def from_points(points: Iterable[Sequence[int]], d: int) -> MultiPerm:
    """Build a MultiPerm from n points whose every coordinate is a bijection on 1..n."""
    points = [tuple(point) for point in points]
    if d < 2:
        raise DimensionTooSmall("a multidimensional permutation needs d >= 2")
    for point in points:
        if len(point) != d:
            raise DimensionMismatch(f"point {point} is not {d}-dimensional")
    columns = [list(coordinate) for coordinate in zip(*points)] if points else [[] for _ in range(d)]
    return new_multiperm(columns[1:], first_row=columns[0])


def increasing(d: int, n: int) -> MultiPerm:
    return new_multiperm([list(range(1, n + 1)) for _ in range(d - 1)])


def decreasing(d: int, n: int) -> MultiPerm:
    return new_multiperm([list(range(n, 0, -1)) for _ in range(d - 1)])


def sgn_between(perm: MultiPerm, j: int, i: int) -> str:
    """Return sgn(Π_j − Π_i) as a string over {+, -}."""
    if j == i:
        raise SameIndex(f"cannot compare element {i} with itself")
    target = perm.element(j)
    origin = perm.element(i)
    return "".join("+" if a > b else "-" for a, b in zip(target, origin))


def complement_row(perm: MultiPerm, i: int) -> MultiPerm:
    """Complement coordinate ``i``; for i = 1 this reverses the column order."""
    if not 1 <= i <= perm.d:
        raise IndexOutOfRange(f"row {i} outside 1..{perm.d}")
    n = perm.n
    if i == 1:
        return MultiPerm(d=perm.d, rows=tuple(tuple(reversed(row)) for row in perm.rows))
    rows = list(perm.rows)
    rows[i - 2] = tuple(n + 1 - value for value in rows[i - 2])
    return MultiPerm(d=perm.d, rows=tuple(rows))


def permute_coordinates(perm: MultiPerm, tau: Sequence[int]) -> MultiPerm:
    """New coordinate r is old coordinate tau[r] (1-based), then re-canonicalised."""
    if sorted(tau) != list(range(1, perm.d + 1)):
        raise IndexOutOfRange(f"{list(tau)} is not a permutation of 1..{perm.d}")
    points = [tuple(point[source - 1] for source in tau) for point in perm.elements()]
    if not points:
        return perm
    return from_points(points, perm.d)


def inflate(perm: MultiPerm, i: int, sigma: MultiPerm) -> MultiPerm:
    """Replace element ``i`` of ``perm`` by an order-isomorphic copy of ``sigma``."""
    if perm.d != sigma.d:
        raise DimensionMismatch(f"cannot inflate a d={perm.d} permutation by a d={sigma.d} one")
    anchor = perm.element(i)
    m = sigma.n
    points: List[Point] = []
    for index, point in enumerate(perm.elements(), start=1):
        if index == i:
            points.extend(
                tuple(anchor[r] - 1 + inner[r] for r in range(perm.d))
                for inner in sigma.elements()
            )
            continue
        points.append(
            tuple(value if value < anchor[r] else value + m - 1 for r, value in enumerate(point))
        )
    return from_points(points, perm.d)


def inflate_all(perm: MultiPerm, sigma: MultiPerm) -> MultiPerm:
    """Inflate every element of ``perm`` by ``sigma``; the result has length n·m."""
    if perm.d != sigma.d:
        raise DimensionMismatch(f"cannot inflate a d={perm.d} permutation by a d={sigma.d} one")
    m = sigma.n
    points = [
        tuple((outer[r] - 1) * m + inner[r] for r in range(perm.d))
        for outer in perm.elements()
        for inner in sigma.elements()
    ]
    if not points:
        return new_multiperm([[] for _ in range(perm.d - 1)])
    return from_points(points, perm.d)


def restrict(perm: MultiPerm, indices: Sequence[int]) -> MultiPerm:
    """Standardise the subsequence of elements at the given (1-based) indices."""
    chosen = [perm.element(index) for index in sorted(indices)]
    return from_points(_standardize(chosen), perm.d) if chosen else new_multiperm(
        [[] for _ in range(perm.d - 1)]
    )


def _standardize(points: List[Point]) -> List[Point]:
    ranks = []
    for coordinate in zip(*points):
        order = sorted(coordinate)
        ranks.append([order.index(value) + 1 for value in coordinate])
    return [tuple(values) for values in zip(*ranks)]


def _check_bijection(row: Tuple[int, ...], n: int) -> None:
    if sorted(row) != list(range(1, n + 1)):
        raise NotAPermutation(f"{_text(row)} is not a permutation of 1..{n}")


def _text(row: Sequence[int]) -> str:
    return " ".join(str(value) for value in row)
