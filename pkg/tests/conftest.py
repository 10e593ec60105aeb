from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings

from boxrep.graph import Graph
from boxrep.rng import SplitMix64

settings.register_profile(
    "suite", max_examples=60,
    suppress_health_check=[HealthCheck.too_slow], deadline=None)
settings.load_profile("suite")


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph.from_edges(n, combinations(range(n), 2))


def star_graph(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a, b):
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph():
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
             (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
             (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    return Graph.from_edges(10, edges)


def all_graphs(n):
    """Every labeled graph on exactly n vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if (mask >> i) & 1))


def all_graphs_upto(n_max):
    for n in range(1, n_max + 1):
        yield from all_graphs(n)


def random_graph(n, p_percent, seed):
    """Seeded Bernoulli graph, independent of the package generators."""
    rng = SplitMix64(seed)
    edges = [e for e in combinations(range(n), 2)
             if rng.below(100) < p_percent]
    return Graph.from_edges(n, edges)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def p4():
    return path_graph(4)
