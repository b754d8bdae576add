import pytest
from hypothesis import HealthCheck, settings

from algebra.session import Session
from config import SessionConfig

settings.register_profile(
    "pcplab",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("pcplab")


@pytest.fixture
def x2():
    return Session.cuntz(2)


@pytest.fixture
def x3():
    return Session.cuntz(3)


@pytest.fixture
def y22():
    return Session.matrices(2, 2)


@pytest.fixture
def small_cfg():
    return SessionConfig(2, samples=40, max_exponent=2, max_k=1, nest_depth=2)
