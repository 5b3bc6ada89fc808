"""
Unit Tests for the MS Bound Replay
Part of Gate 1: Functional Completeness

Tests:
- Forced cores for the two MS graphs of order 15
- Individual bound checks and their serialisation
- Partial reports under a starved budget
"""

from fractions import Fraction

import pytest

from pq_graph_cores.core.budget import SearchBudget
from pq_graph_cores.core.core_classifier import SELF
from pq_graph_cores.core.ms_bounds import BoundCheck, MSProofReport, replay_ms_proof
from pq_graph_cores.core.spec_parser import parse_family


def checks_by_name(report):
    return {check.name: check for check in report.checks}


class TestOrder15Replay:
    """Gate 1: Functional Completeness - MS Graphs of Order 15"""

    def test_singleton_u_is_self(self):
        """Gamma(2,3,{},{0}): omega 3, chi 4, so the graph is its own core"""
        report = replay_ms_proof(parse_family("ms:2,3,,0"))
        checks = checks_by_name(report)
        assert report.case == "a"
        assert report.complete
        assert checks["chi_order_15"].value == 4
        assert checks["clique_upper"].value == 3
        assert report.forced_core == SELF

    def test_pair_u_is_k5(self):
        """Gamma(2,3,{},{1,2}): omega = chi = 5 forces K5"""
        report = replay_ms_proof(parse_family("ms:2,3,,1,2"))
        checks = checks_by_name(report)
        assert checks["chi_order_15"].value == 5
        assert report.forced_core == "K_5"

    def test_clique_upper_bound(self):
        """omega <= 2^a|U|/(p-1) + 1 holds"""
        report = replay_ms_proof(parse_family("ms:2,3,,1,2"))
        check = checks_by_name(report)["clique_upper"]
        assert check.bound == Fraction(5)
        assert check.holds is True

    def test_checks_listed(self):
        """The bound chain is evaluated in a fixed order"""
        report = replay_ms_proof(parse_family("ms:2,3,,1,2"))
        names = [check.name for check in report.checks]
        assert names[:4] == ["clique_lower", "clique_upper", "alpha_upper", "complement_identity"]
        assert "local_alpha" in names

    def test_alpha_bound_needs_two_residues(self):
        """The complement clique bound is only applied when |U| >= 2"""
        single = checks_by_name(replay_ms_proof(parse_family("ms:2,3,,0")))
        pair = checks_by_name(replay_ms_proof(parse_family("ms:2,3,,1,2")))
        assert "alpha_upper" not in single
        assert pair["alpha_upper"].bound == Fraction(4)
        assert pair["alpha_upper"].holds is True


class TestReplayRecords:
    """Gate 1: Functional Completeness - Report Records"""

    def test_partial_under_budget(self):
        """A starved budget yields an incomplete report with undecided checks"""
        report = replay_ms_proof(parse_family("ms:2,3,,0"), SearchBudget(node_limit=1))
        assert not report.complete
        assert not report.all_hold
        assert checks_by_name(report)["clique_upper"].holds is None
        assert report.forced_core is None

    def test_non_ms_rejected(self):
        """Only MS specs have a bound replay"""
        with pytest.raises(ValueError):
            replay_ms_proof(parse_family("gpr:5,2"))

    def test_bound_check_dict(self):
        """Fractions serialise as strings"""
        check = BoundCheck("clique_upper", "omega <= 3", 3, Fraction(7, 2), True)
        assert check.to_dict() == {
            "name": "clique_upper",
            "statement": "omega <= 3",
            "value": 3,
            "bound": "7/2",
            "holds": True,
        }

    def test_failed_checks(self):
        """failed() lists refuted checks only"""
        report = MSProofReport(
            parse_family("ms:2,3,,0"),
            "a",
            [
                BoundCheck("x", "x", 1, None, True),
                BoundCheck("y", "y", 2, None, False),
                BoundCheck("z", "z", None, None, None),
            ],
        )
        assert [check.name for check in report.failed()] == ["y"]
        assert not report.all_hold
        assert report.to_dict()["spec"] == "ms:2,3,,0"
