import pytest

from gbgc import from_edge_list

BARBELL_EDGES = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]


@pytest.fixture
def k2():
    return from_edge_list(2, [(0, 1)])


@pytest.fixture
def k3():
    return from_edge_list(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def p3():
    return from_edge_list(3, [(0, 1), (1, 2)])


@pytest.fixture
def star3():
    return from_edge_list(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def barbell():
    """Two triangles {0,1,2} and {3,4,5} joined by the bridge (2,3)."""
    return from_edge_list(6, BARBELL_EDGES)
