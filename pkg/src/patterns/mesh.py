from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Tuple, Union

from errors import BadSymbol, DimensionMismatch, DuplicateColumn, IndexOutOfRange
from patterns.smp import SMP, SignVector
from perms.multiperm import MultiPerm, increasing

Cell = Tuple[int, ...]


@dataclass(frozen=True)
class MeshPattern:
    """A length-k d-dimensional mesh pattern (T, shading).

    A cell (c_1, ..., c_d) with 0 <= c_j <= k holds the outside elements whose
    coordinate j lies strictly between the coordinate-j values of the c_j-th and
    (c_j + 1)-th occurrence elements, counted in position order.
    """

    T: MultiPerm
    shading: FrozenSet[Cell] = frozenset()

    def __post_init__(self) -> None:
        k = self.T.n
        cells = frozenset(tuple(int(value) for value in cell) for cell in self.shading)
        for cell in cells:
            if len(cell) != self.T.d:
                raise DimensionMismatch(f"cell {cell} is not {self.T.d}-dimensional")
            if any(not 0 <= value <= k for value in cell):
                raise IndexOutOfRange(f"cell {cell} outside 0..{k}")
        object.__setattr__(self, "shading", cells)

    @property
    def d(self) -> int:
        return self.T.d

    @property
    def k(self) -> int:
        return self.T.n


def mesh_pattern_pd(d: int) -> MeshPattern:
    """The pattern ((12, ..., 12), empty shading)."""
    return MeshPattern(T=increasing(d, 2))


@dataclass(frozen=True)
class Shaded:
    def __str__(self) -> str:
        return "#"


@dataclass(frozen=True)
class AtLeast:
    x: int

    def __post_init__(self) -> None:
        if self.x < 1:
            raise BadSymbol(f"at-least marks need x >= 1, got {self.x}")

    def __str__(self) -> str:
        return str(self.x)


Mark = Union[Shaded, AtLeast]


@dataclass(frozen=True)
class MarkedSMP:
    d: int
    entries: Tuple[Tuple[SignVector, Mark], ...]

    def __post_init__(self) -> None:
        keys = [vector for vector, _ in self.entries]
        if len(set(keys)) != len(keys):
            raise DuplicateColumn("marked pattern columns must be distinct")
        for vector in keys:
            if vector.d != self.d:
                raise DimensionMismatch(f"column {vector} is not {self.d}-dimensional")
        object.__setattr__(self, "entries", tuple(sorted(self.entries, key=lambda item: item[0])))

    @cached_property
    def shaded_masks(self) -> FrozenSet[int]:
        return frozenset(vector.mask for vector, mark in self.entries if isinstance(mark, Shaded))

    @cached_property
    def lower_bounds(self) -> Dict[int, int]:
        return {vector.mask: mark.x for vector, mark in self.entries if isinstance(mark, AtLeast)}

    def __str__(self) -> str:
        return ",".join(f"{vector}:{mark}" for vector, mark in self.entries)


def make_marked(entries: Iterable[Tuple[str | SignVector, Mark]]) -> MarkedSMP:
    pairs = [
        (vector if isinstance(vector, SignVector) else SignVector(vector), mark)
        for vector, mark in entries
    ]
    if not pairs:
        raise BadSymbol("a marked pattern needs at least one column")
    return MarkedSMP(d=pairs[0][0].d, entries=tuple(pairs))


def marked_from_smp(pattern: SMP) -> MarkedSMP:
    """The marked pattern that shades exactly the columns of ``pattern``."""
    return MarkedSMP(d=pattern.d, entries=tuple((column, Shaded()) for column in pattern.columns))


def smmp_all_plus(d: int, x: int = 1) -> MarkedSMP:
    """The single-column marked pattern (+, ..., +) with at least ``x`` elements."""
    return MarkedSMP(d=d, entries=((SignVector("+" * d), AtLeast(x)),))
