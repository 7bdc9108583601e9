import random

import pytest
from hypothesis import HealthCheck, settings

from plink.fixtures import random_complex

settings.register_profile(
    "default", deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def small_complexes(seed, count, **kw):
    """Deterministic stream of random complexes for oracle-style sweeps."""
    r = random.Random(seed)
    for _ in range(count):
        yield random_complex(r, **kw)
