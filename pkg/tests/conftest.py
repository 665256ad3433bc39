from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def wine_scores_path() -> Path:
    return DATA_DIR / "wine_scores.csv"
