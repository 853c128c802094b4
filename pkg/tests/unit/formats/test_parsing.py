"""Tests for the text formats."""

from fractions import Fraction

import pytest

from toricnest.algebra.orders import lex
from toricnest.algebra.ring import Ring
from toricnest.exceptions import MonomialParseError, ParseError
from toricnest.formats.parsing import (
    format_basis,
    format_configuration,
    format_sv_spec,
    parse_basis,
    parse_binomial,
    parse_configuration,
    parse_counts,
    parse_nested_system,
    parse_sv_spec,
    read_text,
)


class TestConfiguration:
    """Test cases for configuration files."""

    def test_fixture(self, fixtures_dir):
        """Test the coupon base file parses with a computed weight."""
        C = parse_configuration(read_text(fixtures_dir / "coupon_base.cfg"))
        assert C.ring.variables == ("t1", "t2")
        assert len(C) == 3
        assert C.weight == (Fraction(1, 2), Fraction(1, 2))

    def test_explicit_weight(self):
        """Test a weight line is used as given and survives formatting."""
        text = "ring: t1 t2\nweight: 1/2 1/2\nt1^2\nt1*t2\n"
        C = parse_configuration(text)
        assert format_configuration(C) == text

    def test_missing_ring(self):
        """Test a body without a ring line reports its first line."""
        with pytest.raises(ParseError) as exc_info:
            parse_configuration("# comment\n\nt1^2\n")
        assert exc_info.value.line_number == 3

    def test_unknown_variable(self):
        """Test unknown variables carry their line number."""
        with pytest.raises(MonomialParseError) as exc_info:
            parse_configuration("ring: t1\nt1\nt9\n")
        assert exc_info.value.line_number == 3

    def test_misplaced_weight(self):
        """Test a weight line after members is rejected."""
        with pytest.raises(ParseError):
            parse_configuration("ring: t1\nt1\nweight: 1\n")

    def test_weight_length(self):
        """Test the weight must have one entry per variable."""
        with pytest.raises(ParseError):
            parse_configuration("ring: t1 t2\nweight: 1\nt1\n")


class TestSegreVeroneseSpec:
    """Test cases for spec files."""

    def test_fixture(self, fixtures_dir):
        """Test the Segre 2x2 spec and its formatting."""
        text = read_text(fixtures_dir / "segre_2x2.sv")
        spec = parse_sv_spec(text)
        assert (spec.d, spec.tau, spec.n) == (4, 2, 2)
        assert parse_sv_spec(format_sv_spec(spec)) == spec

    def test_bad_range(self):
        """Test a malformed range line is reported."""
        with pytest.raises(ParseError) as exc_info:
            parse_sv_spec("sv: d=2 tau=2\nrange 1-2 min 0 max 1\n")
        assert exc_info.value.line_number == 2


class TestNestedSystem:
    """Test cases for nested system files."""

    def test_fixture(self, fixtures_dir):
        """Test the coupon system file."""
        parsed = parse_nested_system(read_text(fixtures_dir / "coupon.nested"))
        assert len(parsed.inner) == 2
        assert parsed.spec is None
        assert parsed.inner_orders == [None, None]

    def test_sv_base(self, fixtures_dir):
        """Test a base given as a Segre-Veronese spec."""
        parsed = parse_nested_system(read_text(fixtures_dir / "veronese_line.nested"))
        assert parsed.spec is not None
        assert [m.exponents for m in parsed.base.members] == [(2,)]

    def test_orders(self):
        """Test order lines are collected per section."""
        text = "base:\nring: t1\norder: grevlex\nt1^2\ninner 1:\nring: u1 u2\nu1\nu2\norder: lex\n"
        parsed = parse_nested_system(text)
        assert parsed.base_order == "grevlex"
        assert parsed.inner_orders == ["lex"]

    def test_unknown_order(self):
        """Test an unknown order name is reported."""
        with pytest.raises(ParseError):
            parse_nested_system("base:\nring: t1\norder: deglex\nt1^2\ninner 1:\nring: u1\nu1\n")

    def test_gap_in_sections(self):
        """Test inner sections must be numbered from one without gaps."""
        with pytest.raises(ParseError):
            parse_nested_system("base:\nring: t1\nt1^2\ninner 2:\nring: u1\nu1\n")

    def test_section_count(self):
        """Test the inner count must match the base ring."""
        with pytest.raises(ParseError):
            parse_nested_system("base:\nring: t1 t2\nt1*t2\ninner 1:\nring: u1\nu1\n")

    def test_content_before_header(self):
        """Test lines before the first section are rejected."""
        with pytest.raises(ParseError) as exc_info:
            parse_nested_system("ring: t1\nbase:\n")
        assert exc_info.value.line_number == 1


class TestBasis:
    """Test cases for marked basis files."""

    def test_binomial(self):
        """Test a marked binomial line."""
        ring = Ring(("a", "b", "c"))
        g = parse_binomial("a*c -> b^2", ring)
        assert (g.lead.exponents, g.tail.exponents) == ((1, 0, 1), (0, 2, 0))

    def test_missing_arrow(self):
        """Test a line without an arrow."""
        with pytest.raises(MonomialParseError):
            parse_binomial("a*c - b^2", Ring(("a", "b", "c")), line_number=4)

    def test_lead_equals_tail(self):
        """Test lead and tail must differ."""
        with pytest.raises(MonomialParseError):
            parse_binomial("a -> a", Ring(("a",)))

    def test_format_sorts_by_order(self):
        """Test output is sorted by lead under the given order."""
        ring = Ring(("a", "b", "c"))
        G = parse_basis("a*c -> b^2\nb*c -> a^2\n", ring)
        assert format_basis(G, lex(ring)) == "b*c -> a^2\na*c -> b^2\n"
        assert parse_basis(format_basis(G), ring).same_marked_set(G)


class TestCounts:
    """Test cases for observed count vectors."""

    def test_integers(self):
        """Test comma and space separated counts."""
        ring = Ring(("a", "b", "c"))
        assert parse_counts("1, 0 2", ring) == (1, 0, 2)

    def test_monomial(self):
        """Test counts given as a monomial."""
        ring = Ring(("a", "b", "c"))
        assert parse_counts("a*c^2", ring) == (1, 0, 2)

    def test_wrong_length(self):
        """Test the count vector must match the ring."""
        with pytest.raises(ParseError):
            parse_counts("1,2", Ring(("a", "b", "c")))

    def test_missing_file(self, tmp_path):
        """Test unreadable files become parse errors."""
        with pytest.raises(ParseError):
            read_text(tmp_path / "missing.cfg")
