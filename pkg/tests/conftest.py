import pytest
from hypothesis import HealthCheck, settings

from tests.helpers import birds_kb, penguins_kb

settings.register_profile(
    "crsolve",
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("crsolve")


@pytest.fixture(scope="session")
def birds():
    return birds_kb()


@pytest.fixture(scope="session")
def penguins():
    return penguins_kb()
