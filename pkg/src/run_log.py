from __future__ import annotations

import re
from datetime import datetime
from pathlib import Path
from typing import Callable, List, Optional

DEFAULT_MAX_BYTES = 1024 * 1024


class FeatureLog:
    """Per-feature text logs under ``log_dir``, one backup kept on rotation."""

    def __init__(
        self,
        log_dir: Path,
        enabled: bool = False,
        max_bytes: int = DEFAULT_MAX_BYTES,
        sink: Optional[Callable[[str], None]] = None,
    ) -> None:
        self._log_dir = log_dir
        self._enabled = enabled
        self._max_bytes = max_bytes
        self._sink = sink
        self.lines: List[str] = []

    def feature(self, feature: str, message: str) -> None:
        stamped = f"{self._timestamp()} [{feature}] {message}"
        self.lines.append(stamped)
        if self._sink:
            self._sink(stamped)
        if not self._enabled:
            return
        self._log_dir.mkdir(parents=True, exist_ok=True)
        safe = re.sub(r"[^A-Za-z0-9_-]+", "_", feature.strip()).lower() or "system"
        self._append_log_line(self._log_dir / f"{safe}.log", stamped)

    def for_feature(self, feature: str) -> Callable[[str], None]:
        return lambda message: self.feature(feature, message)

    def _timestamp(self) -> str:
        return datetime.now().strftime("%Y-%m-%d %H:%M:%S")

    def _append_log_line(self, path: Path, line: str) -> None:
        self._rotate_log_if_needed(path)
        with path.open("a", encoding="utf-8") as handle:
            handle.write(line + "\n")

    def _rotate_log_if_needed(self, path: Path) -> None:
        try:
            size = path.stat().st_size
        except FileNotFoundError:
            return
        if size < self._max_bytes:
            return
        backup = path.with_suffix(path.suffix + ".1")
        if backup.exists():
            backup.unlink()
        path.replace(backup)
