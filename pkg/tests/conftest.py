import pytest

from tnets.graph_core import debruijn_graph, validate_tnet
from tnets.harness import random_tnet


def corpus_nets(count=60, max_m=5):
    """Seeded random nets, m cycling through 1..max_m."""
    return [random_tnet(1 + seed % max_m, seed) for seed in range(count)]


@pytest.fixture(scope="session")
def h2():
    return debruijn_graph(2)


@pytest.fixture(scope="session")
def h3():
    return debruijn_graph(3)


@pytest.fixture(scope="session")
def h4():
    return debruijn_graph(4)


@pytest.fixture(scope="session")
def loops():
    # m=1: two self-loops
    return validate_tnet(1, [(0, 0), (0, 0)])


@pytest.fixture(scope="session")
def parallel_pair():
    return validate_tnet(2, [(0, 1), (0, 1), (1, 0), (1, 0)])


@pytest.fixture(scope="session")
def corpus():
    return corpus_nets()
