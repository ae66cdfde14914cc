import pytest

from artinfix.presentation import validate_graph


@pytest.fixture(scope="session")
def triangle():
    return validate_graph([("a", "b", 3), ("a", "c", 3), ("b", "c", 3)])


@pytest.fixture(scope="session")
def edge3():
    return validate_graph([("a", "b", 3)])


@pytest.fixture(scope="session")
def edge4():
    return validate_graph([("a", "b", 4)])


@pytest.fixture(scope="session")
def mixed334():
    # one even edge inside a triangle, still large type
    return validate_graph([("a", "b", 4), ("a", "c", 3), ("b", "c", 3)])
