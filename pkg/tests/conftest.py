import pytest

from imbedsum.graphs import complete


@pytest.fixture(scope="session")
def k4():
    return complete(4)


@pytest.fixture(scope="session")
def k5():
    return complete(5)
