import os
import sys
from pathlib import Path

import pytest
import structlog

ROOT = Path(__file__).parent
sys.path.insert(0, str(ROOT))

FIXTURES = ROOT / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def corpus_path() -> Path:
    return FIXTURES / "corpus.jsonl"


@pytest.fixture(autouse=True)
def _isolated_env(monkeypatch):
    # Keep developer VERITAS_* settings out of the test runs.
    for name in list(os.environ):
        if name.startswith("VERITAS_"):
            monkeypatch.delenv(name, raising=False)


@pytest.fixture(autouse=True)
def _reset_structlog():
    # configure_logging() binds the current sys.stderr; pytest closes its
    # per-test capture stream, so drop that config before the next test.
    yield
    structlog.reset_defaults()
