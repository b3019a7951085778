import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
)
settings.load_profile("default")


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # expose the call-phase outcome to fixtures (used by the acceptance report)
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
