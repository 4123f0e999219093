from __future__ import annotations

import sys
from pathlib import Path

import pytest

SRC = Path(__file__).resolve().parent.parent / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from enumeration.engine import EnumerationEngine  # noqa: E402
from table_store import TableStore  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive checks that take more than a few seconds")


@pytest.fixture
def engine():
    return EnumerationEngine(budget=10 ** 9, workers=1)


@pytest.fixture(params=[4, 8], ids=lambda workers: f"workers={workers}")
def parallel_engine(request):
    return EnumerationEngine(budget=10 ** 9, workers=request.param)


@pytest.fixture
def store(tmp_path):
    return TableStore(tmp_path / "cache")


@pytest.fixture
def isolated_settings(tmp_path, monkeypatch):
    """Point the CLI at an empty settings file and a private cache."""
    monkeypatch.setenv("MESHPERM_SETTINGS", str(tmp_path / "settings.json"))
    monkeypatch.setenv("MESHPERM_CACHE", str(tmp_path / "cache"))
    monkeypatch.delenv("MESHPERM_WORKERS", raising=False)
    monkeypatch.delenv("MESHPERM_BUDGET", raising=False)
    return tmp_path
