from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import FrozenSet, Iterable, Iterator, Sequence, Tuple

from errors import (
    DimensionMismatch,
    DimensionTooSmall,
    DuplicateColumn,
    BadSymbol,
    IndexOutOfRange,
    NotProjective,
    RaggedColumns,
)

FLIP = {"+": "-", "-": "+"}


@dataclass(frozen=True, order=True)
class SignVector:
    """One column of T(P); ordering is lexicographic with + before -."""

    entries: str

    def __post_init__(self) -> None:
        if len(self.entries) < 2:
            raise DimensionTooSmall(f"sign vector {self.entries!r} needs length >= 2")
        bad = set(self.entries) - {"+", "-"}
        if bad:
            raise BadSymbol(f"sign vector {self.entries!r} contains {''.join(sorted(bad))!r}")

    @property
    def d(self) -> int:
        return len(self.entries)

    @property
    def mask(self) -> int:
        """Bit r is set when row r+1 carries a minus."""
        return sum(1 << r for r, sign in enumerate(self.entries) if sign == "-")

    @classmethod
    def from_mask(cls, mask: int, d: int) -> "SignVector":
        return cls("".join("-" if mask >> r & 1 else "+" for r in range(d)))

    def complement(self) -> "SignVector":
        return SignVector("".join(FLIP[sign] for sign in self.entries))

    def flip(self, i: int) -> "SignVector":
        entries = list(self.entries)
        entries[i - 1] = FLIP[entries[i - 1]]
        return SignVector("".join(entries))

    def drop(self, i: int) -> "SignVector":
        return SignVector(self.entries[: i - 1] + self.entries[i:])

    def pair_key(self) -> "SignVector":
        return min(self, self.complement())

    def __str__(self) -> str:
        return self.entries


@dataclass(frozen=True)
class SMP:
    """A d-dimensional singleton mesh pattern: a set of distinct sign vectors."""

    d: int
    columns: Tuple[SignVector, ...]

    def __post_init__(self) -> None:
        if self.d < 2:
            raise DimensionTooSmall(f"patterns need d >= 2, got {self.d}")
        for column in self.columns:
            if column.d != self.d:
                raise RaggedColumns(f"column {column} is not {self.d}-dimensional")
        if len(set(self.columns)) != len(self.columns):
            raise DuplicateColumn("pattern columns must be distinct")
        if list(self.columns) != sorted(self.columns):
            object.__setattr__(self, "columns", tuple(sorted(self.columns)))

    @property
    def k(self) -> int:
        return len(self.columns)

    @cached_property
    def column_set(self) -> FrozenSet[SignVector]:
        return frozenset(self.columns)

    @cached_property
    def masks(self) -> FrozenSet[int]:
        return frozenset(column.mask for column in self.columns)

    def __contains__(self, column: object) -> bool:
        return column in self.column_set

    def __str__(self) -> str:
        return ",".join(column.entries for column in self.columns)


def make_smp(columns: Iterable[str | SignVector], d: int | None = None) -> SMP:
    vectors = [column if isinstance(column, SignVector) else SignVector(column) for column in columns]
    if d is None:
        if not vectors:
            raise DimensionTooSmall("the empty pattern needs an explicit dimension")
        d = vectors[0].d
    return SMP(d=d, columns=tuple(vectors))


def empty_pattern(d: int) -> SMP:
    return SMP(d=d, columns=())


def full_pattern(d: int) -> SMP:
    return SMP(d=d, columns=tuple(_all_vectors(d)))


def hyperplane_core(d: int, i: int) -> SMP:
    """All 2^(d-1) columns with + in row i."""
    _check_row(d, i)
    return SMP(d=d, columns=tuple(v for v in _all_vectors(d) if v.entries[i - 1] == "+"))


def all_patterns(d: int) -> Iterator[SMP]:
    """Every one of the 2^(2^d) d-SMPs, smallest first."""
    vectors = _all_vectors(d)
    for size in range(len(vectors) + 1):
        for chosen in combinations(vectors, size):
            yield SMP(d=d, columns=chosen)


def permute_rows(pattern: SMP, tau: Sequence[int]) -> SMP:
    """New row r is old row tau[r] (both 1-based)."""
    if sorted(tau) != list(range(1, pattern.d + 1)):
        raise IndexOutOfRange(f"{list(tau)} is not a permutation of 1..{pattern.d}")
    return SMP(
        d=pattern.d,
        columns=tuple(
            SignVector("".join(column.entries[source - 1] for source in tau))
            for column in pattern.columns
        ),
    )


def complement_row_p(pattern: SMP, i: int) -> SMP:
    _check_row(pattern.d, i)
    return SMP(d=pattern.d, columns=tuple(column.flip(i) for column in pattern.columns))


def apply_symmetry(pattern: SMP, steps: Sequence[Tuple[str, object]]) -> SMP:
    """Apply ("permute", tau) / ("complement", i) steps in order."""
    for kind, argument in steps:
        if kind == "permute":
            pattern = permute_rows(pattern, argument)  # type: ignore[arg-type]
        elif kind == "complement":
            pattern = complement_row_p(pattern, int(argument))  # type: ignore[arg-type]
        else:
            raise BadSymbol(f"unknown symmetry step {kind!r}")
    return pattern


def union(first: SMP, second: SMP) -> SMP:
    _check_same_d(first, second)
    return SMP(d=first.d, columns=tuple(first.column_set | second.column_set))


def intersection(first: SMP, second: SMP) -> SMP:
    _check_same_d(first, second)
    return SMP(d=first.d, columns=tuple(first.column_set & second.column_set))


def is_subset(small: SMP, large: SMP) -> bool:
    _check_same_d(small, large)
    return small.column_set <= large.column_set


def is_projective(pattern: SMP, i: int) -> bool:
    _check_row(pattern.d, i)
    return all(column.flip(i) in pattern.column_set for column in pattern.columns)


def project(pattern: SMP, i: int) -> SMP:
    if not is_projective(pattern, i):
        raise NotProjective(f"pattern {pattern} is not projective in direction {i}")
    if pattern.d < 3:
        raise DimensionTooSmall("projection of a 2-dimensional pattern leaves one row")
    return SMP(d=pattern.d - 1, columns=tuple({column.drop(i) for column in pattern.columns}))


def is_plus_antipodal(pattern: SMP) -> bool:
    return all(column.complement() in pattern.column_set for column in pattern.columns)


def is_minus_antipodal(pattern: SMP) -> bool:
    if pattern.k != 2 ** (pattern.d - 1):
        return False
    return all(column.complement() not in pattern.column_set for column in pattern.columns)


def contains_minus_antipodal_subset(pattern: SMP) -> bool:
    """True iff every antipodal pair {C, c(C)} has a representative in the pattern."""
    represented = {column.pair_key() for column in pattern.columns}
    return len(represented) == 2 ** (pattern.d - 1)


def missing_antipodal_pairs(pattern: SMP) -> Tuple[SignVector, ...]:
    """Pair keys of the antipodal pairs with neither member in the pattern, sorted."""
    represented = {column.pair_key() for column in pattern.columns}
    keys = sorted({vector.pair_key() for vector in _all_vectors(pattern.d)})
    return tuple(key for key in keys if key not in represented)


def is_hyperplane(pattern: SMP, i: int) -> bool:
    return hyperplane_core(pattern.d, i).column_set <= pattern.column_set


def _all_vectors(d: int) -> Tuple[SignVector, ...]:
    if d < 2:
        raise DimensionTooSmall(f"patterns need d >= 2, got {d}")
    return tuple(SignVector("".join(signs)) for signs in product("+-", repeat=d))


def _check_row(d: int, i: int) -> None:
    if not 1 <= i <= d:
        raise IndexOutOfRange(f"row {i} outside 1..{d}")


def _check_same_d(first: SMP, second: SMP) -> None:
    if first.d != second.d:
        raise DimensionMismatch(f"patterns have dimensions {first.d} and {second.d}")
