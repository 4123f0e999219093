from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from enumeration.counters import AvoiderCounter, MarkedCounter, MeshCounter, SmpCounter
from enumeration.engine import EnumerationEngine
from patterns.mesh import MarkedSMP, MeshPattern
from patterns.pattern_text import format_marked, format_mesh, format_smp
from patterns.smp import SMP


@dataclass(frozen=True)
class DistributionTable:
    """counts[k] is the number of length-n d-permutations with k occurrences."""

    kind: str
    pattern_id: str
    d: int
    n: int
    counts: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def avoiders(self) -> int:
        return self.counts[0]

    def max_occurrences(self) -> int:
        return max(k for k, count in enumerate(self.counts) if count)

    def coefficient(self, k: int) -> int:
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "pattern": self.pattern_id,
            "d": self.d,
            "n": self.n,
            "counts": [str(count) for count in self.counts],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DistributionTable":
        return cls(
            kind=str(data["kind"]),
            pattern_id=str(data["pattern"]),
            d=int(data["d"]),
            n=int(data["n"]),
            counts=tuple(int(count) for count in data["counts"]),
        )

    def csv_rows(self) -> List[List[str]]:
        return [["k", "count"]] + [[str(k), str(count)] for k, count in enumerate(self.counts)]


def distribution_smp(
    pattern: SMP, n: int, engine: Optional[EnumerationEngine] = None
) -> DistributionTable:
    counts = (engine or EnumerationEngine()).run(SmpCounter(pattern), n)
    return DistributionTable("smp", format_smp(pattern), pattern.d, n, counts)


def distribution_mesh(
    pattern: MeshPattern, n: int, engine: Optional[EnumerationEngine] = None
) -> DistributionTable:
    counts = (engine or EnumerationEngine()).run(MeshCounter(pattern), n)
    return DistributionTable("mesh", format_mesh(pattern), pattern.d, n, counts)


def distribution_marked(
    pattern: MarkedSMP, n: int, engine: Optional[EnumerationEngine] = None
) -> DistributionTable:
    counts = (engine or EnumerationEngine()).run(MarkedCounter(pattern), n)
    return DistributionTable("marked", format_marked(pattern), pattern.d, n, counts)


def count_avoiders(pattern: SMP, n: int, engine: Optional[EnumerationEngine] = None) -> int:
    return (engine or EnumerationEngine()).run(AvoiderCounter(pattern), n)[0]


def distribution_series(
    pattern: SMP, order: int, engine: Optional[EnumerationEngine] = None
) -> List[DistributionTable]:
    """Tables for n = 0..order, the truncation of F_P(x, q)."""
    engine = engine or EnumerationEngine()
    return [distribution_smp(pattern, n, engine) for n in range(order + 1)]


def max_occurrences(pattern: SMP, n: int, engine: Optional[EnumerationEngine] = None) -> int:
    return distribution_smp(pattern, n, engine).max_occurrences()
