from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import permutations
from math import factorial
from typing import Callable, List, Optional, Tuple

import numpy as np

from enumeration.counters import BlockCounter
from errors import BudgetExceeded, DimensionTooSmall, EnumerationError

DEFAULT_BUDGET = 10 ** 9
DEFAULT_BLOCK_SIZE = 4096

ChunkTask = Tuple[BlockCounter, int, int, int, int, int]


def all_row_perms(n: int) -> np.ndarray:
    """Every permutation of 1..n in lexicographic order, shape (n!, n)."""
    return np.array(list(permutations(range(1, n + 1))), dtype=np.int64).reshape(-1, n)


def iter_blocks(d: int, n: int, start: int, stop: int, block_size: int = DEFAULT_BLOCK_SIZE):
    """Yield (B, n, d) point arrays for row-2 ranks ``start..stop-1``.

    Tuples come out in lexicographic order of the concatenated rows 2..d.
    """
    perms = all_row_perms(n)
    shape = (len(perms),) * (d - 1)
    tail_total = len(perms) ** (d - 2)
    positions = np.arange(1, n + 1, dtype=np.int64)
    first, last = start * tail_total, stop * tail_total
    for offset in range(first, last, block_size):
        flat = np.arange(offset, min(offset + block_size, last))
        block = np.empty((len(flat), n, d), dtype=np.int64)
        block[:, :, 0] = positions
        for r, index in enumerate(np.unravel_index(flat, shape)):
            block[:, :, 1 + r] = perms[index]
        yield block


def count_chunk(task: ChunkTask) -> List[int]:
    counter, d, n, start, stop, block_size = task
    totals = np.zeros(counter.bins(n), dtype=np.int64)
    for block in iter_blocks(d, n, start, stop, block_size):
        totals += np.bincount(counter.count_block(block), minlength=counter.bins(n))
    return [int(value) for value in totals]


class EnumerationEngine:
    """Exhaustive histogram of a per-permutation statistic over S^d_n.

    Work is split on the rank of row 2; chunks are counted in order and their
    histograms summed, so any worker count gives the same table.
    """

    def __init__(
        self,
        budget: int = DEFAULT_BUDGET,
        workers: int = 1,
        block_size: int = DEFAULT_BLOCK_SIZE,
        logger: Optional[Callable[[str], None]] = None,
    ) -> None:
        self.budget = budget
        self.workers = max(1, workers)
        self.block_size = block_size
        self._logger = logger or (lambda message: None)

    def check_budget(self, counter: BlockCounter, n: int) -> int:
        total = factorial(n) ** (counter.d - 1)
        cost = total * counter.cost(n)
        if cost > self.budget:
            raise BudgetExceeded(
                f"{counter.label()} at n={n} needs ~{cost} checks, budget is {self.budget}"
            )
        return total

    def run(self, counter: BlockCounter, n: int) -> Tuple[int, ...]:
        d = counter.d
        if d < 2:
            raise DimensionTooSmall(f"enumeration needs d >= 2, got {d}")
        if n == 0:
            return (1,) + (0,) * (counter.bins(0) - 1)
        total = self.check_budget(counter, n)
        heads = factorial(n)
        parts = min(heads, self.workers * 4)
        bounds = [heads * part // parts for part in range(parts + 1)]
        tasks: List[ChunkTask] = [
            (counter, d, n, bounds[part], bounds[part + 1], self.block_size)
            for part in range(parts)
            if bounds[part] < bounds[part + 1]
        ]
        self._logger(f"{counter.label()} d={d} n={n}: {total} permutations in {len(tasks)} chunks")
        if self.workers == 1:
            results = [count_chunk(task) for task in tasks]
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                results = list(executor.map(count_chunk, tasks))
        counts = [sum(column) for column in zip(*results)]
        if sum(counts) != total:
            raise EnumerationError(
                f"{counter.label()} d={d} n={n}: counted {sum(counts)} of {total} permutations"
            )
        self._logger(f"{counter.label()} d={d} n={n}: done")
        return tuple(counts)
