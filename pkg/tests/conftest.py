import random
from pathlib import Path

import pytest

from kappaterms.catalog import standard_fixtures

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def fixtures():
    return standard_fixtures()


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
