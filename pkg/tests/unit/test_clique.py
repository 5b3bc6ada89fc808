"""
Unit Tests for the Clique Solver
Part of Gate 1: Functional Completeness

Tests:
- Exact clique and independence numbers with witnesses
- Budget exhaustion with bounds
- Property checks on random graphs
"""

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from pq_graph_cores.adapters import from_networkx
from pq_graph_cores.core.budget import SearchBudget
from pq_graph_cores.core.clique import clique_number, independence_number
from pq_graph_cores.core.graph import Graph, complete_graph, empty_graph
from pq_graph_cores.core.homomorphism import chromatic_number


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


@st.composite
def random_graphs(draw, max_order=9):
    n = draw(st.integers(min_value=1, max_value=max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


class TestCliqueNumber:
    """Gate 1: Functional Completeness - Maximum Clique"""

    def test_complete_graph(self):
        """omega(K5) = 5"""
        result = clique_number(complete_graph(5))
        assert result.found
        assert result.value == 5
        assert result.witness == (0, 1, 2, 3, 4)

    def test_odd_cycle(self):
        """omega(C5) = 2"""
        assert clique_number(cycle(5)).value == 2

    def test_petersen(self):
        """Petersen graph: omega 2, alpha 4"""
        petersen = from_networkx(nx.petersen_graph())
        assert clique_number(petersen).value == 2
        assert independence_number(petersen).value == 4

    def test_empty_vertex_set(self):
        """The null graph has clique number 0"""
        result = clique_number(Graph((), ()))
        assert result.value == 0
        assert result.witness == ()

    def test_edgeless(self):
        """Edgeless graphs: omega 1, alpha n"""
        assert clique_number(empty_graph(4)).value == 1
        assert independence_number(empty_graph(4)).value == 4

    def test_independent_witness(self):
        """The alpha witness is an independent set of the graph"""
        graph = cycle(7)
        result = independence_number(graph)
        assert result.value == 3
        assert not any(graph.adjacent(u, v) for u in result.witness for v in result.witness)

    def test_budget_exhaustion_reports_bounds(self):
        """A one-node budget on C5 leaves omega in [2, 3]"""
        result = clique_number(cycle(5), SearchBudget(node_limit=1))
        assert result.indeterminate
        assert result.bounds == (2, 3)
        assert result.value is None


class TestCliqueProperties:
    """Gate 1: Functional Completeness - Solver Properties"""

    @settings(max_examples=60, deadline=None)
    @given(random_graphs())
    def test_witness_is_clique(self, graph):
        """The witness has omega vertices, pairwise adjacent"""
        result = clique_number(graph)
        assert len(result.witness) == result.value
        assert all(
            graph.adjacent(u, v) for u in result.witness for v in result.witness if u != v
        )

    @settings(max_examples=40, deadline=None)
    @given(random_graphs(max_order=8))
    def test_colouring_bounds(self, graph):
        """omega <= chi and alpha * chi >= n"""
        omega = clique_number(graph).value
        alpha = independence_number(graph).value
        chi = chromatic_number(graph).value
        assert omega <= chi
        assert alpha * chi >= graph.n
