import pytest
from hypothesis import given

from boxrep.coloring import (
    Coloring,
    acyclic_coloring,
    chromatic_number,
    is_proper,
    pair_classes_induce_forests,
    smallest_acyclic_coloring,
    validate_acyclic,
)
from boxrep.errors import InvalidColoring, SizeLimitExceeded
from boxrep.graph import Graph

from conftest import complete_graph, cycle_graph, path_graph, petersen_graph
from test_graph_core import graphs_strategy


class TestChromaticNumber:
    def test_known_values(self):
        assert chromatic_number(complete_graph(4)) == 4
        assert chromatic_number(cycle_graph(5)) == 3
        assert chromatic_number(petersen_graph()) == 3
        assert chromatic_number(Graph(3, frozenset())) == 1

    def test_size_limit(self):
        with pytest.raises(SizeLimitExceeded):
            chromatic_number(Graph(25, frozenset()))

    @given(graphs_strategy(7))
    def test_is_achievable_and_minimal(self, g):
        chi = chromatic_number(g)
        assert 1 <= chi <= g.n
        if g.m:
            assert chi >= 2


class TestAcyclicColoring:
    def test_p4_two_colors(self):
        c = acyclic_coloring(path_graph(4), 2)
        assert c is not None and c.k == 2
        validate_acyclic(path_graph(4), c)

    def test_c4_two_colors_impossible(self):
        assert acyclic_coloring(cycle_graph(4), 2) is None

    def test_k4_identity(self):
        c = acyclic_coloring(complete_graph(4), 4)
        assert c is not None
        assert c.color == {0: 0, 1: 1, 2: 2, 3: 3}

    def test_size_limit(self):
        with pytest.raises(SizeLimitExceeded):
            acyclic_coloring(Graph(17, frozenset()), 3)

    def test_validator_rejects_improper(self):
        g = path_graph(2)
        with pytest.raises(InvalidColoring):
            validate_acyclic(g, Coloring({0: 0, 1: 0}, 1))

    def test_validator_rejects_bichromatic_cycle(self):
        g = cycle_graph(4)
        with pytest.raises(InvalidColoring):
            validate_acyclic(g, Coloring({0: 0, 1: 1, 2: 0, 3: 1}, 2))

    @given(graphs_strategy(6))
    def test_output_passes_independent_verifier(self, g):
        c = smallest_acyclic_coloring(g)
        assert is_proper(g, c.color)
        assert pair_classes_induce_forests(g, c.color)
        assert c.k == len(set(c.color.values()))
