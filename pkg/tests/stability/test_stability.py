"""
Stability Tests for the Core Solvers
Gate 4: Edge Cases and Error Handling

Tests behaviour under adverse conditions:
1. Exhausted node budgets report bounds, never guesses
2. Malformed family strings and invalid parameters
3. Broken generators and malformed graphs
4. Degenerate graphs (null, edgeless, complete)
5. Deterministic witnesses and process-parallel batches
"""

import asyncio

import pytest

from pq_graph_cores.core.budget import SearchBudget, SearchStatus, budget_from_config
from pq_graph_cores.core.clique import clique_number, independence_number
from pq_graph_cores.core.core_classifier import ClassificationError, classify_core
from pq_graph_cores.core.families import FamilyParameterError
from pq_graph_cores.core.graph import Graph, GraphError, Homomorphism, complete_graph, empty_graph
from pq_graph_cores.core.homomorphism import chromatic_number, find_homomorphism
from pq_graph_cores.core.orbits import GeneratorError, GeneratorSet, orbit_transitivity_check
from pq_graph_cores.core.spec_parser import SpecParseError, load_family, parse_family
from pq_graph_cores.core.validation import Agreement, cross_validate_batch


class TestBudgetExhaustion:
    """Gate 4: Stability - Budget Exhaustion"""

    def test_clique_bounds_bracket_answer(self):
        """An exhausted clique search keeps lower <= omega <= upper"""
        graph = load_family("gpr:17,8").graph
        result = clique_number(graph, SearchBudget(node_limit=2))
        assert result.status is SearchStatus.INDETERMINATE
        assert result.value is None
        assert result.lower <= 3 <= result.upper

    def test_chromatic_bounds_bracket_answer(self):
        """chi(Paley(17)) = 6 stays inside the reported bounds"""
        graph = load_family("gpr:17,8").graph
        result = chromatic_number(graph, SearchBudget(node_limit=2))
        assert result.indeterminate
        assert result.lower <= 6 <= result.upper

    def test_homomorphism_indeterminate(self):
        """Starved homomorphism searches return no witness"""
        source = load_family("gpr:13,4").graph
        target = load_family("gpr:5,2").graph
        result = find_homomorphism(source, target, SearchBudget(node_limit=1))
        assert result.indeterminate
        assert result.witness is None

    def test_prediction_undecided(self):
        """The classifier passes exhaustion through instead of guessing"""
        spec = parse_family("dellex:gpr:11,2,q=5")
        prediction = classify_core(spec, SearchBudget(node_limit=1))
        assert not prediction.resolved

    @pytest.mark.parametrize(
        "config",
        [{"node_limit": 0}, {"time_limit": 0}, {"time_limit": -1.5}],
    )
    def test_invalid_budgets(self, config):
        """Budgets must be positive"""
        with pytest.raises(ValueError):
            budget_from_config(config)

    def test_budget_defaults(self):
        """Missing keys fall back to the defaults"""
        assert budget_from_config({}) == SearchBudget()
        assert budget_from_config({"node_limit": "40"}).node_limit == 40


class TestMalformedInput:
    """Gate 4: Stability - Malformed Family Strings"""

    @pytest.mark.parametrize("text", ["", ":", "gpr:", "gpr:,", "gpr:7,2,3", "gpr:7;2", "dellex:"])
    def test_rejected_with_position(self, text):
        """Every malformed string raises SpecParseError with a position inside the text"""
        with pytest.raises(SpecParseError) as excinfo:
            parse_family(text)
        assert 0 <= excinfo.value.position <= len(text)

    @pytest.mark.parametrize(
        "text",
        [
            "gpr:7,3",
            "gpr:9,2",
            "g2qr:9,2",
            "g2qr:7,4",
            "gpqrsu:5,3,1,2,1",
            "lex:gpr:5,2,q=5",
            "dellex:gpr:5,2,q=3",
        ],
    )
    def test_invalid_parameters(self, text):
        """Parameters outside the family's domain raise FamilyParameterError"""
        with pytest.raises(FamilyParameterError):
            load_family(text)

    def test_unclassified_ms_graph(self):
        """MS graphs with S non-empty have no table row"""
        with pytest.raises(ClassificationError):
            classify_core(parse_family("ms:2,3,1/2,0"))


class TestMalformedGraphs:
    """Gate 4: Stability - Graph and Generator Errors"""

    def test_bad_generator_named(self):
        """A non-automorphism is reported by name and edge"""
        path = Graph.from_edges(3, [(0, 1), (1, 2)])
        generators = GeneratorSet.from_pairs([("swap", [1, 0, 2])])
        with pytest.raises(GeneratorError) as excinfo:
            orbit_transitivity_check(path, generators)
        assert excinfo.value.name == "swap"
        assert "swap" in str(excinfo.value)

    @pytest.mark.parametrize(
        "rows,labels",
        [
            ((0b01,), (0,)),
            ((0b10, 0b00), (0, 1)),
            ((0b10, 0b01), (0, 0)),
            ((0b10, 0b01), (0,)),
            ((0b100, 0b00), (0, 1)),
        ],
    )
    def test_invalid_rows(self, rows, labels):
        """Loops, asymmetric rows, duplicate labels and stray bits are rejected"""
        with pytest.raises(GraphError):
            Graph(rows, labels)

    def test_edge_out_of_range(self):
        """from_edges checks vertex indices"""
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 2)])

    def test_invalid_map_detected(self):
        """A map sending an edge to a non-edge is not a homomorphism"""
        hom = Homomorphism(complete_graph(2), empty_graph(2), (0, 1))
        assert not hom.is_valid


class TestDegenerateGraphs:
    """Gate 4: Stability - Degenerate Graphs"""

    def test_null_graph(self):
        """The null graph has omega = chi = 0"""
        null = Graph((), ())
        assert clique_number(null).value == 0
        assert chromatic_number(null).value == 0

    def test_edgeless(self):
        """Edgeless graphs have chi = 1 and alpha = n"""
        assert chromatic_number(empty_graph(4)).value == 1
        assert independence_number(empty_graph(4)).value == 4

    def test_complete(self):
        """K_n: omega = chi = n, alpha = 1"""
        k6 = complete_graph(6)
        assert clique_number(k6).value == 6
        assert chromatic_number(k6).value == 6
        assert independence_number(k6).value == 1


class TestDeterminism:
    """Gate 4: Stability - Reproducible Results"""

    def test_clique_witness_stable(self):
        """Repeated clique searches return the same witness"""
        graph = load_family("ms:2,3,,1,2").graph
        assert clique_number(graph).witness == clique_number(graph).witness

    def test_homomorphism_witness_stable(self):
        """Repeated homomorphism searches return the same map"""
        source = load_family("gpqrsu:3,5,2,2,1").graph
        target = load_family("gpr:5,2").graph
        first = find_homomorphism(source, target)
        second = find_homomorphism(source, target)
        assert first.found
        assert first.witness.mapping == second.witness.mapping

    def test_parallel_batch_matches_serial(self):
        """jobs=2 yields the same verdicts in the same order as jobs=1"""
        specs = [parse_family(text) for text in ("g2qr:5,2", "gpr:7,2", "lex:gpr:5,2,q=3")]
        serial = asyncio.run(cross_validate_batch(specs, jobs=1))
        parallel = asyncio.run(cross_validate_batch(specs, jobs=2))
        assert [v.agreement for v in parallel] == [v.agreement for v in serial]
        assert [v.computed.core_tag for v in parallel] == [v.computed.core_tag for v in serial]
        assert all(v.agreement is Agreement.AGREE for v in parallel)
