import json
from pathlib import Path

import pytest

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "golden"

GOLDEN_FILES = sorted(GOLDEN_DIR.glob("*.json"))


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR


def load_golden(name: str) -> dict:
    with open(GOLDEN_DIR / name, encoding="utf-8") as fh:
        return json.load(fh)
