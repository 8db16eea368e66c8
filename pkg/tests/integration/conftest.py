"""Integration test fixtures.

These fixtures are available to all tests under tests/integration/.
"""

import json
from pathlib import Path

import pytest

from tests.conftest import EXAMPLE_EDGES


@pytest.fixture()
def example_file(tmp_path) -> Path:
    path = tmp_path / "example.txt"
    path.write_text(EXAMPLE_EDGES, encoding="utf-8")
    return path


@pytest.fixture()
def last_diagnostic(capsys):
    """Parse the final stderr line as the JSON diagnostic."""

    def read() -> dict:
        lines = capsys.readouterr().err.strip().splitlines()
        return json.loads(lines[-1])

    return read
