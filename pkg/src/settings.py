from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from errors import ConfigError

BASE_DIR = Path(__file__).resolve().parent.parent
DEFAULT_SETTINGS_PATH = BASE_DIR / "data" / "settings.json"
OUTPUT_FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class RunConfig:
    budget: int = 10 ** 9
    workers: int = 1
    cache_dir: Path = BASE_DIR / "data" / "cache"
    output: str = "json"
    log_enabled: bool = False
    log_dir: Path = BASE_DIR / "data" / "logs"
    log_max_bytes: int = 1024 * 1024

    def validate(self) -> "RunConfig":
        if self.budget < 1:
            raise ConfigError(f"budget must be >= 1, got {self.budget}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if self.output not in OUTPUT_FORMATS:
            raise ConfigError(f"output must be one of {', '.join(OUTPUT_FORMATS)}, got {self.output!r}")
        return self

    def with_overrides(self, **overrides: Any) -> "RunConfig":
        values = {key: value for key, value in overrides.items() if value is not None}
        if "cache_dir" in values:
            values["cache_dir"] = _resolve(values["cache_dir"])
        return replace(self, **values).validate()


def load_settings(
    path: Optional[Path] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> RunConfig:
    """Defaults, then the settings file, then MESHPERM_* environment variables."""
    environ = os.environ if environ is None else environ
    if path is None:
        path = Path(environ["MESHPERM_SETTINGS"]) if environ.get("MESHPERM_SETTINGS") else DEFAULT_SETTINGS_PATH
    payload = _read_payload(path)
    defaults = RunConfig()
    try:
        config = RunConfig(
            budget=int(payload.get("budget", defaults.budget)),
            workers=int(payload.get("workers", defaults.workers)),
            cache_dir=_resolve(payload.get("cache_dir", defaults.cache_dir)),
            output=str(payload.get("output", defaults.output)),
            log_enabled=bool(payload.get("log_enabled", defaults.log_enabled)),
            log_dir=_resolve(payload.get("log_dir", defaults.log_dir)),
            log_max_bytes=int(payload.get("log_max_bytes", defaults.log_max_bytes)),
        )
        if environ.get("MESHPERM_CACHE"):
            config = replace(config, cache_dir=_resolve(environ["MESHPERM_CACHE"]))
        if environ.get("MESHPERM_WORKERS"):
            config = replace(config, workers=int(environ["MESHPERM_WORKERS"]))
        if environ.get("MESHPERM_BUDGET"):
            config = replace(config, budget=int(float(environ["MESHPERM_BUDGET"])))
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad setting: {exc}") from None
    return config.validate()


def _read_payload(path: Path) -> Dict[str, Any]:
    if not path.exists():
        return {}
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except (json.JSONDecodeError, OSError):
        return {}
    return payload if isinstance(payload, dict) else {}


def _resolve(value: Any) -> Path:
    path = Path(value)
    return path if path.is_absolute() else BASE_DIR / path
