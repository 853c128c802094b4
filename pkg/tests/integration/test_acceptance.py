"""Worked examples run end to end, compared against the toric ideal oracle."""

import json

import pytest

from toricnest.cli import EXIT_OK, main
from toricnest.formats.parsing import format_basis, read_text
from toricnest.groebner.buchberger import buchberger
from toricnest.groebner.verification import check_groebner_basis, is_squarefree_initial, verify_marking
from toricnest.nested.bases import main1_basis
from toricnest.segre_veronese.bases import main2_basis
from toricnest.toric.generators import toric_generators

from tests.conftest import load_system

pytestmark = [pytest.mark.integration, pytest.mark.slow]


def assert_reduced_gb(G, system):
    P = system.presentation
    oracle = toric_generators(P.configuration, presentation=P)
    check = check_groebner_basis(G, oracle, evaluate=P.evaluate)
    assert check.holds
    assert buchberger(oracle, check.certificate.as_order(G)).same_marked_set(G)


class TestCouponSystem:
    """Two shops with two items each."""

    def test_main1(self, coupon_system):
        """Test the 105-element quadratic basis against the oracle."""
        G = main1_basis(coupon_system)
        assert len(G) == 105
        assert_reduced_gb(G, coupon_system)

    def test_main2(self, coupon_system):
        """Test the sorted basis against the oracle."""
        G = main2_basis(coupon_system)
        assert_reduced_gb(G, coupon_system)
        assert is_squarefree_initial(G)

    def test_cli_oracle_mode(self, fixtures_dir, tmp_path):
        """Test the oracle mode of the nested command verifies."""
        report_path = tmp_path / "report.json"
        code = main(["--log-level", "WARNING", "--report", str(report_path), "nested",
                     str(fixtures_dir / "coupon.nested"), "--mode", "oracle", "--verify",
                     "--out", str(tmp_path / "oracle.gb")])
        assert code == EXIT_OK
        report = json.loads(report_path.read_text())
        assert report["configuration_size"] == 19
        assert report["verdicts"]["matches_oracle_basis"] is True


class TestExamSystem:
    """Two of three groups, two of three problems in each chosen group."""

    def test_main1(self, exam_system):
        """Test the exam basis is quadratic and verifies."""
        G = main1_basis(exam_system)
        assert all(g.degree == 2 for g in G)
        assert verify_marking(G) is not None
        assert_reduced_gb(G, exam_system)

    def test_cli_verify(self, fixtures_dir, tmp_path):
        """Test `nested --verify` on the exam system."""
        report_path = tmp_path / "report.json"
        code = main(["--log-level", "WARNING", "--report", str(report_path), "nested",
                     str(fixtures_dir / "exam.nested"), "--verify", "--out", str(tmp_path / "exam.gb")])
        assert code == EXIT_OK
        report = json.loads(report_path.read_text())
        assert report["configuration_size"] == 27
        assert report["max_degree"] == 2


class TestLineSystem:
    """The degree-two Veronese of a line, both constructions."""

    def test_both_constructions(self, line_system):
        """Test both bases are reduced Gröbner bases for different orders."""
        first, second = main1_basis(line_system), main2_basis(line_system)
        assert_reduced_gb(first, line_system)
        assert_reduced_gb(second, line_system)
        assert not first.same_marked_set(second)


STORED_BASES = [
    ("coupon.nested", "main1", "coupon_main1.gb"),
    ("coupon.nested", "main2", "coupon_main2.gb"),
    ("exam.nested", "main1", "exam_main1.gb"),
]
CONSTRUCTIONS = {"main1": main1_basis, "main2": main2_basis}


class TestStoredBases:
    """Constructed bases against the checked-in basis files."""

    @pytest.mark.parametrize(("system_file", "mode", "expected"), STORED_BASES)
    def test_written_basis_matches(self, fixtures_dir, system_file, mode, expected):
        """Test the written basis is byte-identical to the stored file."""
        G = CONSTRUCTIONS[mode](load_system(system_file))
        assert format_basis(G) == read_text(fixtures_dir / expected)

    @pytest.mark.parametrize(("system_file", "mode", "expected"), STORED_BASES)
    def test_cli_output_matches(self, fixtures_dir, tmp_path, system_file, mode, expected):
        """Test `nested --out` writes the stored file byte for byte."""
        out = tmp_path / expected
        code = main(["--log-level", "WARNING", "nested", str(fixtures_dir / system_file),
                     "--mode", mode, "--out", str(out)])
        assert code == EXIT_OK
        assert out.read_bytes() == (fixtures_dir / expected).read_bytes()

    def test_coupon_main1_size(self, fixtures_dir):
        """Test the stored coupon basis has 105 quadrics."""
        lines = read_text(fixtures_dir / "coupon_main1.gb").splitlines()
        assert len(lines) == 105
