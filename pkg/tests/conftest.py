import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "knotrho",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("knotrho")


@pytest.fixture
def rng():
    return random.Random(20240817)
