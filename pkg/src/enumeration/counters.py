from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from patterns.mesh import MarkedSMP, MeshPattern
from patterns.occurrence import avoids_points, count_mesh_points
from patterns.smp import SMP


class BlockCounter:
    """Per-permutation statistic evaluated on a block of permutations.

    A block is an integer array of shape (B, n, d) holding the points of B
    permutations; ``count_block`` returns one statistic value per permutation.
    """

    d: int

    def bins(self, n: int) -> int:
        raise NotImplementedError

    def cost(self, n: int) -> int:
        """Elementary checks spent on one permutation of length n."""
        return max(1, n * n)

    def count_block(self, block: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def label(self) -> str:
        raise NotImplementedError


def sign_masks(block: np.ndarray) -> np.ndarray:
    """masks[b, i, j] has bit r set when coordinate r of point j is below point i."""
    d = block.shape[2]
    weights = (1 << np.arange(d)).astype(np.int64)
    below = block[:, None, :, :] < block[:, :, None, :]
    return (below * weights).sum(axis=-1)


def _off_diagonal(n: int) -> np.ndarray:
    return ~np.eye(n, dtype=bool)


@dataclass(frozen=True)
class SmpCounter(BlockCounter):
    pattern: SMP

    @property
    def d(self) -> int:  # type: ignore[override]
        return self.pattern.d

    def bins(self, n: int) -> int:
        return n + 1

    def count_block(self, block: np.ndarray) -> np.ndarray:
        n = block.shape[1]
        shaded = np.zeros(1 << self.pattern.d, dtype=bool)
        shaded[list(self.pattern.masks)] = True
        blocked = shaded[sign_masks(block)] & _off_diagonal(n)
        return (~blocked.any(axis=2)).sum(axis=1)

    def label(self) -> str:
        return f"smp {self.pattern}"


@dataclass(frozen=True)
class AvoiderCounter(BlockCounter):
    """0 for an avoider, 1 otherwise; stops at the first occurrence found."""

    pattern: SMP

    @property
    def d(self) -> int:  # type: ignore[override]
        return self.pattern.d

    def bins(self, n: int) -> int:
        return 2

    def count_block(self, block: np.ndarray) -> np.ndarray:
        masks = self.pattern.masks
        return np.array(
            [0 if avoids_points([tuple(point) for point in perm.tolist()], masks) else 1
             for perm in block],
            dtype=np.int64,
        )

    def label(self) -> str:
        return f"avoiders {self.pattern}"


@dataclass(frozen=True)
class MarkedCounter(BlockCounter):
    pattern: MarkedSMP

    @property
    def d(self) -> int:  # type: ignore[override]
        return self.pattern.d

    def bins(self, n: int) -> int:
        return n + 1

    def count_block(self, block: np.ndarray) -> np.ndarray:
        n = block.shape[1]
        masks = sign_masks(block)
        off = _off_diagonal(n)
        shaded = np.zeros(1 << self.pattern.d, dtype=bool)
        shaded[list(self.pattern.shaded_masks)] = True
        ok = ~(shaded[masks] & off).any(axis=2)
        for mask, needed in self.pattern.lower_bounds.items():
            ok &= ((masks == mask) & off).sum(axis=2) >= needed
        return ok.sum(axis=1)

    def label(self) -> str:
        return f"marked {self.pattern}"


@dataclass(frozen=True)
class MeshCounter(BlockCounter):
    pattern: MeshPattern

    @property
    def d(self) -> int:  # type: ignore[override]
        return self.pattern.d

    def bins(self, n: int) -> int:
        return comb(n, self.pattern.k) + 1

    def cost(self, n: int) -> int:
        return max(1, comb(n, self.pattern.k) * n)

    def count_block(self, block: np.ndarray) -> np.ndarray:
        return np.array(
            [count_mesh_points([tuple(point) for point in perm.tolist()], self.pattern)
             for perm in block],
            dtype=np.int64,
        )

    def label(self) -> str:
        return f"mesh k={self.pattern.k}"


@dataclass(frozen=True)
class AscendingPairCounter(BlockCounter):
    """1 when some positions i < j ascend in every row 2..d at once, else 0."""

    d: int

    def bins(self, n: int) -> int:
        return 2

    def count_block(self, block: np.ndarray) -> np.ndarray:
        n = block.shape[1]
        rows = block[:, :, 1:]
        ascending = (rows[:, None, :, :] > rows[:, :, None, :]).all(axis=-1)
        later = np.triu(np.ones((n, n), dtype=bool), k=1)
        return (ascending & later).any(axis=(1, 2)).astype(np.int64)

    def label(self) -> str:
        return f"ascending pairs d={self.d}"
