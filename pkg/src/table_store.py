from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Callable, Optional

from enumeration.distribution import DistributionTable


def table_key(kind: str, pattern_id: str, d: int, n: int) -> str:
    canonical = json.dumps(
        {"kind": kind, "pattern": pattern_id, "d": d, "n": n},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class TableStore:
    """Content-addressed cache of distribution tables, one JSON file per table."""

    def __init__(self, root: Path, logger: Optional[Callable[[str], None]] = None) -> None:
        self._root = root
        self._logger = logger or (lambda message: None)

    def path_for(self, kind: str, pattern_id: str, d: int, n: int) -> Path:
        key = table_key(kind, pattern_id, d, n)
        return self._root / key[:2] / f"{key}.json"

    def load(self, kind: str, pattern_id: str, d: int, n: int) -> Optional[DistributionTable]:
        path = self.path_for(kind, pattern_id, d, n)
        if not path.exists():
            return None
        try:
            table = DistributionTable.from_dict(json.loads(path.read_text(encoding="utf-8")))
        except (json.JSONDecodeError, OSError, KeyError, TypeError, ValueError):
            self._logger(f"unreadable cache entry {path.name}, recomputing")
            return None
        if (table.kind, table.pattern_id, table.d, table.n) != (kind, pattern_id, d, n):
            self._logger(f"cache entry {path.name} does not match its key, recomputing")
            return None
        self._logger(f"hit {kind} d={d} n={n} {pattern_id}")
        return table

    def save(self, table: DistributionTable) -> Path:
        path = self.path_for(table.kind, table.pattern_id, table.d, table.n)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(table.to_dict(), indent=2, sort_keys=True), encoding="utf-8")
        self._logger(f"stored {table.kind} d={table.d} n={table.n} {table.pattern_id}")
        return path

    def get_or_compute(
        self,
        kind: str,
        pattern_id: str,
        d: int,
        n: int,
        compute: Callable[[], DistributionTable],
    ) -> DistributionTable:
        cached = self.load(kind, pattern_id, d, n)
        if cached is not None:
            return cached
        table = compute()
        self.save(table)
        return table
