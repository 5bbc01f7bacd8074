import os
import random

import pytest

DEFAULT_SEED = 20260823


@pytest.fixture
def rng():
    """Seeded RNG; override the seed with the DIFFSYM_SEED env var."""
    return random.Random(int(os.environ.get("DIFFSYM_SEED", DEFAULT_SEED)))
