import sys
import pytest
from pathlib import Path

# Project root first so `core`, `tools` and `execution` resolve to this checkout
ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT))

from core.oracle import sieve
from core.settings import Settings


@pytest.fixture(scope="session")
def prime_set_1e6():
    """Plain sieve over [0, 10**6], shared by the whole session."""
    return sieve(10**6)


@pytest.fixture(scope="session")
def prime_set_1e7():
    """Plain sieve over [0, 10**7], shared by the whole session."""
    return sieve(10**7)


@pytest.fixture(autouse=True)
def fresh_settings():
    """Every test starts from settings.yaml, never from a previous test's override."""
    Settings.reset()
    yield
    Settings.reset()
