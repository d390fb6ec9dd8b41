import datetime as dt
from pathlib import Path

import numpy as np
import pytest

from episignal import DailySeries, parse_long_csv

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_DIR = Path(__file__).parent / "golden"
FIXTURE_CSV = DATA_DIR / "us_daily_synthetic.csv"


@pytest.fixture(scope="session")
def fixture_series() -> DailySeries:
    return parse_long_csv(FIXTURE_CSV.read_text(encoding="utf-8"), label="US-synthetic")


@pytest.fixture
def short_series() -> DailySeries:
    return DailySeries(dt.date(2020, 3, 1), np.arange(1.0, 31.0), "toy")
