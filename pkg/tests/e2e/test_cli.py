"""
End-to-End Tests for the pq-cores Command Line
Gate 2: Integration Quality Validation

Tests full command scenarios:
1. family -> report and DOT / JSON export
2. invariants -> witnesses and budget exhaustion (exit 3)
3. core -> brute, classified, certificate and a forced DISAGREE (exit 2)
4. hom -> plain and eta / zeta constrained searches
5. Usage and parse errors (exit 1)
"""

import json

import pytest

from pq_graph_cores.adapters.serialization import graph_from_json
from pq_graph_cores.cli import main
from pq_graph_cores.core.core_classifier import Prediction
from pq_graph_cores.core.families import build, gpr_spec


def run_cli(capsys, *argv):
    code = main(list(argv))
    report = json.loads(capsys.readouterr().out)
    assert report["exit_code"] == code
    return code, report


class TestFamilyCommand:
    """Gate 2: Integration Quality - family"""

    def test_family_report(self, capsys):
        """G(5,2) is the 5-cycle"""
        code, report = run_cli(capsys, "family", "gpr:5,2")
        assert code == 0
        assert report["command"] == "family"
        assert (report["order"], report["edges"], report["valency"]) == (5, 5, 2)
        assert report["bipartite"] is False
        assert report["connected"] is True
        assert report["vertex_transitive"] is True
        assert report["arc_transitive"] is True

    def test_dot_export_inline(self, capsys):
        """DOT text is embedded when no --out is given"""
        _code, report = run_cli(capsys, "family", "g2qr:3,1", "--export", "dot")
        assert report["export"]["format"] == "dot"
        assert report["export"]["text"].startswith('graph "G(2*3,1)" {')

    def test_json_export_to_file(self, capsys, tmp_path):
        """--out writes a JSON document that loads back"""
        out = tmp_path / "ms.json"
        code, report = run_cli(
            capsys, "family", "ms:2,3,,0", "--export", "json", "--out", str(out)
        )
        assert code == 0
        assert report["export"] == {"format": "json", "path": str(out)}
        graph = graph_from_json(out.read_text())
        assert graph.n == 15
        assert graph.edge_count == 30


class TestInvariantsCommand:
    """Gate 2: Integration Quality - invariants"""

    def test_complete_graph(self, capsys):
        """K5: alpha 1, omega = chi = 5"""
        code, report = run_cli(capsys, "invariants", "gpr:5,4")
        assert code == 0
        assert report["alpha"]["value"] == 1
        assert report["omega"]["value"] == 5
        assert report["chi"]["value"] == 5
        assert report["alpha_omega_at_most_n"] is True
        assert len(report["omega"]["witness"]) == 5

    def test_node_budget_exhausted(self, capsys):
        """A one-node budget leaves omega undecided with exit 3"""
        code, report = run_cli(capsys, "--nodes", "1", "invariants", "lex:gpr:5,2,q=3")
        assert code == 3
        assert "omega" in report["indeterminate"]
        assert report["omega"]["status"] == "indeterminate"

    def test_timing(self, capsys):
        """--timing adds wall-clock fields"""
        _code, report = run_cli(capsys, "--timing", "invariants", "gpr:5,2")
        assert "elapsed_s" in report
        assert "elapsed_s" in report["chi"]


class TestCoreCommand:
    """Gate 2: Integration Quality - core"""

    def test_brute(self, capsys):
        """G(5,2)[E_3] has a 5-vertex core"""
        code, report = run_cli(capsys, "core", "lex:gpr:5,2,q=3", "--method", "brute")
        assert code == 0
        assert report["computed"]["core_tag"] == "order-5"
        assert report["computed"]["core_order"] == 5

    def test_classified(self, capsys):
        """G(2*5,2) is predicted to have core K2"""
        code, report = run_cli(capsys, "core", "g2qr:5,2", "--method", "classified")
        assert code == 0
        assert report["predicted"]["core_tag"] == "K_2"
        assert report["predicted"]["row"] == "Table 1 row 1"

    def test_both_agree(self, capsys):
        """The default compares prediction and computation"""
        code, report = run_cli(capsys, "core", "gpqrsu:3,5,2,2,1")
        assert code == 0
        assert report["agreement"] == "AGREE"
        assert report["predicted"]["core_tag"] == "G(5,2)"
        assert report["trace"]

    def test_certificate(self, capsys):
        """--method certificate skips the brute-force search"""
        code, report = run_cli(capsys, "core", "lex:gpr:5,2,q=3", "--method", "certificate")
        assert code == 0
        assert report["computed"]["method"] == "certificate"

    def test_forced_disagreement(self, capsys, monkeypatch):
        """A wrong table prediction exits with code 2"""

        def wrong(spec, budget=None):
            return Prediction(build(spec).spec, "K_2", "forced", gpr_spec(2, 1))

        monkeypatch.setattr("pq_graph_cores.core.validation.classify_core", wrong)
        code, report = run_cli(capsys, "core", "lex:gpr:5,2,q=3")
        assert code == 2
        assert report["agreement"] == "DISAGREE"

    def test_log_file(self, capsys, tmp_path):
        """--log-file receives the verdict log line"""
        log = tmp_path / "run.log"
        main(["--log-level", "INFO", "--log-file", str(log), "core", "gpr:5,2"])
        capsys.readouterr()
        assert "gpr:5,2: predicted SELF, AGREE" in log.read_text()


class TestHomCommand:
    """Gate 2: Integration Quality - hom"""

    def test_found(self, capsys):
        """K3 maps into K5"""
        code, report = run_cli(capsys, "hom", "gpr:3,2", "gpr:5,4")
        assert code == 0
        assert report["result"]["status"] == "found"
        assert len(set(report["result"]["witness"])) == 3

    def test_none(self, capsys):
        """C5 does not map to C7"""
        code, report = run_cli(capsys, "hom", "gpr:5,2", "gpr:7,2")
        assert code == 0
        assert report["result"]["status"] == "none"

    @pytest.mark.parametrize("mode", ["eta", "zeta"])
    def test_constrained(self, capsys, mode):
        """The 15-cycle admits neither constrained map"""
        code, report = run_cli(capsys, "hom", "gpqrsu:3,5,1,2,4", "--constrained", mode)
        assert code == 0
        assert report["constraint"] == mode
        assert report["result"]["status"] == "none"

    def test_constrained_needs_pq_source(self, capsys):
        """Only G(pq; r, s, u) and G(3q, r) sources have eta / zeta maps"""
        code, report = run_cli(capsys, "hom", "gpr:5,2", "--constrained", "eta")
        assert code == 1
        assert "gpqrsu" in report["error"]

    def test_missing_target(self, capsys):
        """Plain searches need a target"""
        code, report = run_cli(capsys, "hom", "gpr:5,2")
        assert code == 1
        assert report["error"].startswith("usage:")


class TestErrors:
    """Gate 2: Integration Quality - Error Reporting"""

    def test_parse_error_position(self, capsys):
        """Malformed family strings report the offending position"""
        code, report = run_cli(capsys, "family", "gpr:7,x")
        assert code == 1
        assert report["position"] == 6

    def test_invalid_parameters(self, capsys):
        """Non-prime orders are rejected"""
        code, report = run_cli(capsys, "family", "gpr:6,2")
        assert code == 1
        assert "error" in report

    def test_unknown_command(self, capsys):
        """argparse failures become JSON usage errors"""
        code, report = run_cli(capsys, "colour", "gpr:5,2")
        assert code == 1
        assert report["error"].startswith("usage:")


@pytest.mark.slow
class TestVerifyCommand:
    """Gate 2: Integration Quality - verify"""

    def test_smoke_suite(self, capsys):
        """The smoke suite finds no disagreement"""
        code, report = run_cli(capsys, "verify", "--suite", "smoke", "--jobs", "2")
        assert code in (0, 3)
        assert report["counts"]["DISAGREE"] == 0
        assert report["failures"] == []
