import pytest

from commuting_classes import catalog as cat


@pytest.fixture(scope="session")
def s4():
    return cat.load("sym:4", "alt")


@pytest.fixture(scope="session")
def s3():
    return cat.load("sym:3", "alt")
