import pytest

from nashcone import ResolutionGraph, make_family


@pytest.fixture
def a2():
    return make_family("an", 2)


@pytest.fixture
def a3():
    return make_family("an", 3)


@pytest.fixture
def d4():
    return make_family("dn", 4)


@pytest.fixture
def g2w1():
    """Single genus-2 vertex of self-intersection -1."""
    return make_family("vertex", 2, -1)


@pytest.fixture
def two_vertex():
    """E1^2 = -4, E2^2 = -2 meeting with multiplicity 2, both genus 0."""
    return ResolutionGraph(weights=(-4, -2), genera=(0, 0), mult=((0, 2), (2, 0)))


@pytest.fixture
def star3_5():
    """Three arms of weight -5 on a -2 center."""
    return make_family("star3", 5)


@pytest.fixture
def cycle3():
    return make_family("cycle", 3, -3)
