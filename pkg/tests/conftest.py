import pytest

from stardom.digraph import OrientedGraph
from stardom.families import star_digraph


@pytest.fixture
def triangle():
    return OrientedGraph(range(3), [(0, 1), (1, 2), (2, 0)], family_tag="tri")


@pytest.fixture
def st3():
    return star_digraph(3)


@pytest.fixture
def st4():
    return star_digraph(4)


@pytest.fixture
def st5():
    return star_digraph(5)
