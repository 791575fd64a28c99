import pytest

from quadcantor import make_field


@pytest.fixture(scope="session")
def gauss():
    return make_field(-1)


@pytest.fixture(scope="session")
def eisenstein():
    return make_field(-3)
