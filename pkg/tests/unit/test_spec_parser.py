"""
Unit Tests for the Family String Parser
Part of Gate 1: Functional Completeness

Tests:
- Every family grammar
- Canonical text round trips
- Error positions on malformed input
"""

import pytest

from pq_graph_cores.core.families import FamilyTag
from pq_graph_cores.core.spec_parser import SpecParseError, load_family, parse_family


class TestParseFamilies:
    """Gate 1: Functional Completeness - Grammar Coverage"""

    def test_circulant(self):
        """gpr:p,r"""
        spec = parse_family("gpr:7,2")
        assert spec.tag is FamilyTag.GPR
        assert spec.params == {"p": 7, "r": 2}

    def test_whitespace_tolerated(self):
        """Spaces around tokens are ignored"""
        assert parse_family(" gpr : 7 , 2").params == {"p": 7, "r": 2}

    def test_gpqrsu(self):
        """gpqrsu:p,q,r,s,t"""
        spec = parse_family("gpqrsu:3,5,1,2,4")
        assert spec.tag is FamilyTag.GPQRSU
        assert spec["t"] == 4

    def test_ms_empty_s(self):
        """ms:a,m,,U with an empty S"""
        spec = parse_family("ms:2,3,,1,2")
        assert spec["S"] == ()
        assert spec["U"] == (1, 2)

    def test_ms_with_s(self):
        """S elements are joined by '/'"""
        spec = parse_family("ms:2,3,1/2,0")
        assert spec["S"] == (1, 2)
        assert spec["U"] == (0,)

    def test_designs(self):
        """inc:pg,d,r and noninc:h11"""
        assert parse_family("inc:pg,3,2").params == {"design": "pg", "d": 3, "r": 2}
        assert parse_family("noninc:h11").tag is FamilyTag.NONINC

    def test_lex_with_circulant_base(self):
        """lex:gpr:p,r,q=n"""
        spec = parse_family("lex:gpr:5,2,q=3")
        assert spec["base"].params == {"p": 5, "r": 2}
        assert spec["fiber"] == 3

    def test_complete_base_shorthand(self):
        """k<n> stands for G(n, n-1)"""
        spec = parse_family("dellex:k7,q=5")
        assert spec.tag is FamilyTag.DELLEX
        assert spec["base"].params == {"p": 7, "r": 6}

    @pytest.mark.parametrize(
        "text",
        [
            "gpr:7,2",
            "g2qr:5,2",
            "g2_q_r:5,2",
            "g3qr:5,2",
            "gpqrsu:3,5,1,2,4",
            "ms:2,3,,0",
            "ms:2,3,,1,2",
            "ms:2,3,1/2,0",
            "inc:pg,3,2",
            "noninc:h11",
            "lex:gpr:5,2,q=3",
            "dellex:gpr:11,2,q=5",
        ],
    )
    def test_canonical_text(self, text):
        """Canonical strings parse back to themselves"""
        assert parse_family(text).text == text

    def test_load_family(self):
        """Parse and build in one step"""
        assert load_family("gpr:5,4").graph.edge_count == 10


class TestParseErrors:
    """Gate 1: Functional Completeness - Parse Error Positions"""

    @pytest.mark.parametrize(
        "text,position",
        [
            ("7,2", 0),
            ("foo:1,2", 0),
            ("gpr:7", 4),
            ("gpr:7,x", 6),
            ("gpqrsu:3,5,1", 7),
            ("inc:pg,3", 4),
            ("lex:gpr:5,2", 10),
            ("ms:2,3", 3),
        ],
    )
    def test_error_positions(self, text, position):
        """Errors carry the offending character position"""
        with pytest.raises(SpecParseError) as excinfo:
            parse_family(text)
        assert excinfo.value.position == position
        assert f"(at position {position})" in str(excinfo.value)

    def test_lex_base_must_be_circulant(self):
        """Lexicographic bases are gpr or k<n>"""
        with pytest.raises(SpecParseError):
            parse_family("lex:g2qr:5,2,q=3")

    def test_parse_error_is_value_error(self):
        """Callers may catch ValueError"""
        with pytest.raises(ValueError):
            parse_family("gpr:a,b")
