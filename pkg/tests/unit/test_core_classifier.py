"""
Unit Tests for Core Prediction from the Classification Tables
Part of Gate 1: Functional Completeness

Tests:
- Row selection for every family
- Plain and constrained homomorphism rows of G(pq; r, s, u)
- eta / zeta constraint construction
- Symmetric MS case letters
- Traces and undecided predictions
"""

import pytest

from pq_graph_cores.core.budget import SearchBudget, SearchStatus
from pq_graph_cores.core.core_classifier import (
    SELF,
    ClassificationError,
    Prediction,
    classify_core,
    eta_constraint,
    ms_case,
    ms_table_row,
    pq_form,
    zeta_constraint,
)
from pq_graph_cores.core.families import FamilyTag
from pq_graph_cores.core.homomorphism import ConstraintMode
from pq_graph_cores.core.spec_parser import load_family, parse_family


def predict(text, budget=None):
    return classify_core(parse_family(text), budget)


class TestSimpleRows:
    """Gate 1: Functional Completeness - Rows Without Search"""

    def test_prime_order(self):
        """Circulants of prime order are their own cores"""
        prediction = predict("gpr:7,2")
        assert prediction.core_tag == SELF
        assert prediction.is_self
        assert prediction.row == "prime order"

    def test_bipartite_double(self):
        """G(2q, r) has core K2"""
        prediction = predict("g2qr:5,2")
        assert prediction.core_tag == "K_2"
        assert prediction.row == "Table 1 row 1"
        assert prediction.core_spec.text == "gpr:2,1"

    def test_twinned_circulant(self):
        """G(2, q, r) has core G(q, r)"""
        prediction = predict("g2_q_r:7,2")
        assert prediction.core_tag == "G(7,2)"
        assert prediction.row == "Table 1 row 2"

    @pytest.mark.parametrize(
        "text,row,core",
        [
            ("lex:k3,q=5", "Table 1 row 5", "G(3,2)"),
            ("lex:gpr:5,2,q=3", "Table 1 row 6", "G(5,2)"),
            ("lex:k2,q=7", "Table 1 row 7", "G(2,1)"),
            ("lex:gpr:5,4,q=7", "Table 1 row 7", "G(5,4)"),
            ("lex:gpr:7,2,q=5", "Table 1 row 8", "G(7,2)"),
        ],
    )
    def test_lexicographic_rows(self, text, row, core):
        """G[E_q] has the core of G"""
        prediction = predict(text)
        assert prediction.row == row
        assert prediction.core_tag == core

    @pytest.mark.parametrize(
        "text,row",
        [
            ("inc:pg,3,2", "Table 2 row 1"),
            ("noninc:pg,3,2", "Table 2 row 2"),
            ("inc:h11", "Table 2 row 3"),
            ("noninc:h11", "Table 2 row 4"),
        ],
    )
    def test_design_rows(self, text, row):
        """Incidence graphs are bipartite"""
        prediction = predict(text)
        assert prediction.core_tag == "K_2"
        assert prediction.row == row


class TestDeletedLexicographic:
    """Gate 1: Functional Completeness - Deleted Lexicographic Rows"""

    def test_base_below_fibre(self):
        """n < q: core G(n, r)"""
        prediction = predict("dellex:gpr:5,2,q=7")
        assert prediction.row == "Table 1 row 9"
        assert prediction.core_tag == "G(5,2)"

    def test_colourable_base(self):
        """chi(C11) = 3 <= 5: core G(11, 2)"""
        prediction = predict("dellex:gpr:11,2,q=5")
        assert prediction.row == "Table 1 row 10"
        assert prediction.core_tag == "G(11,2)"
        assert prediction.trace[-1].value is True

    def test_large_clique_base(self):
        """omega(K7) = 7 >= 5: core K5"""
        prediction = predict("dellex:gpr:7,6,q=5")
        assert prediction.row == "Table 1 row 11"
        assert prediction.core_tag == "K_5"
        assert prediction.core_spec.text == "gpr:5,4"

    def test_undecided_chromatic_number(self):
        """A starved budget leaves the row undecided"""
        prediction = predict("dellex:gpr:11,2,q=5", SearchBudget(node_limit=1))
        assert not prediction.resolved
        assert prediction.status is SearchStatus.INDETERMINATE
        assert prediction.trace[-1].value == "INDETERMINATE"


class TestPQRows:
    """Gate 1: Functional Completeness - G(pq; r, s, u) Rows"""

    def test_t_in_h_backward_map(self):
        """t = 1 in H(5, 2): K3 x C5 has core C5"""
        prediction = predict("gpqrsu:3,5,2,2,1")
        assert prediction.row == "Table 1 row 14"
        assert prediction.core_tag == "G(5,2)"
        conditions = [entry.condition for entry in prediction.trace]
        assert "G(3,2) -> G(5,2)" in conditions

    def test_clique_prefilter_recorded(self):
        """omega(K3) > omega(C5) rules out the forward map"""
        prediction = predict("gpqrsu:3,5,2,2,1")
        forward = next(e for e in prediction.trace if e.condition == "G(3,2) -> G(5,2)")
        assert forward.value == "none"
        prefilter = next(e for e in prediction.trace if e.source == "clique pre-filter")
        assert prefilter.value is False

    def test_t_not_in_h_self(self):
        """The 15-cycle: neither eta nor zeta exists"""
        prediction = predict("gpqrsu:3,5,1,2,4")
        assert prediction.row == "Table 1 row 18"
        assert prediction.is_self
        sources = [entry.condition for entry in prediction.trace]
        assert sources[0] == "t=4 in H(5,1)"
        assert sources[1].startswith("eta:")
        assert sources[2].startswith("zeta:")

    def test_g3q_delegates(self):
        """G(3q, r) rows carry the G(pq; r, s, u) row they reduce to"""
        prediction = predict("g3qr:5,1")
        assert prediction.row.endswith("via Table 1 row 4")
        assert prediction.spec.tag is FamilyTag.G3QR
        assert prediction.core_tag == SELF

    def test_pq_form(self):
        """G(3q, r) is G(3q; r, 2, u) with t = -1"""
        full = pq_form(load_family("g3qr:7,2").spec)
        assert full.tag is FamilyTag.GPQRSU
        assert full.params == {"p": 3, "q": 7, "r": 2, "s": 2, "t": 6, "u": 2, "a": 2}
        assert pq_form(parse_family("gpr:5,2")).tag is FamilyTag.GPR


class TestConstraints:
    """Gate 1: Functional Completeness - eta / zeta Constraints"""

    def test_eta_shape(self):
        """eta: G(3,2) -> G(5,2) with classes 0 and 1"""
        spec = pq_form(load_family("gpqrsu:3,5,1,2,4").spec)
        source, target, constraint = eta_constraint(spec)
        assert (source.n, target.n) == (3, 5)
        assert constraint.mode is ConstraintMode.ETA
        assert constraint.arc_class[(0, 1)] == 0
        assert constraint.arc_class[(0, 2)] == 1
        assert constraint.allowed == {0: frozenset({1}), 1: frozenset({4})}

    def test_zeta_shape(self):
        """zeta: G(5,2) -> G(3,2), class index modulo u/r"""
        spec = load_family("gpqrsu:3,5,1,2,4").spec
        source, target, constraint = zeta_constraint(spec)
        assert (source.n, target.n) == (5, 3)
        assert constraint.modulus == 3
        assert constraint.allowed == {0: frozenset({1}), 1: frozenset({2})}
        constraint.validate(source)


class TestMSRows:
    """Gate 1: Functional Completeness - Symmetric MS Rows"""

    @pytest.mark.parametrize(
        "text,case",
        [
            ("ms:2,3,,0", "a"),
            ("ms:4,3,,0", "c"),
            ("ms:4,5,,0", "d"),
            ("ms:4,5,,1,4", "e"),
        ],
    )
    def test_cases(self, text, case):
        """Case letters from (a, p, |U|)"""
        assert ms_case(parse_family(text)) == case

    @pytest.mark.parametrize(
        "text,row,tag",
        [
            ("ms:2,3,,0", "Table 2 row 7", SELF),
            ("ms:2,3,,1,2", "Table 2 row 5", "K_5"),
            ("ms:4,3,,0", "Table 2 row 7", SELF),
            ("ms:4,3,,1,2", "Table 2 row 6", SELF),
            ("ms:4,5,,0", "Table 2 row 8", "K_5"),
            ("ms:4,5,,2,3", "Table 2 row 10", SELF),
        ],
    )
    def test_rows(self, text, row, tag):
        """Rows and predicted cores"""
        found_row, found_tag, _case = ms_table_row(parse_family(text))
        assert (found_row, found_tag) == (row, tag)

    def test_k5_prediction(self):
        """Gamma(2,3,{},{1,2}) predicts K5"""
        prediction = predict("ms:2,3,,1,2")
        assert prediction.core_tag == "K_5"
        assert prediction.core_spec.text == "gpr:5,4"

    def test_nonempty_s_rejected(self):
        """Only S = {} is classified"""
        with pytest.raises(ClassificationError):
            predict("ms:2,3,1/2,0")

    def test_non_symmetric_u_rejected(self):
        """U = {0, 1} does not give a symmetric graph"""
        with pytest.raises(ClassificationError):
            ms_case(parse_family("ms:2,3,,0,1"))


class TestPredictionRecord:
    """Gate 1: Functional Completeness - Prediction Serialisation"""

    def test_to_dict(self):
        """Reports carry tag, family, row, status and trace"""
        data = predict("g2qr:5,2").to_dict()
        assert data["core_tag"] == "K_2"
        assert data["core_family"] == "gpr:2,1"
        assert data["status"] == "found"
        assert data["trace"][0] == {
            "condition": "bipartite",
            "value": True,
            "source": "Table 1 row 1",
        }

    def test_self_has_no_family(self):
        """SELF predictions name no core family"""
        prediction = Prediction(parse_family("gpr:5,2"), SELF, "prime order")
        assert prediction.to_dict()["core_family"] is None
