import pytest
from hypothesis import HealthCheck, settings

from rootfield import mk_field

settings.register_profile(
    "repo",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def f13():
    return mk_field(13, 1)


@pytest.fixture(scope="session")
def f7():
    return mk_field(7, 1)


@pytest.fixture(scope="session")
def f8():
    return mk_field(2, 3)


@pytest.fixture(scope="session")
def f9():
    return mk_field(3, 2)


@pytest.fixture(scope="session")
def f39():
    return mk_field(3, 9)


@pytest.fixture(scope="session")
def f75():
    return mk_field(7, 5)
