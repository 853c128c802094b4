"""Tests for fiber walks."""

import polars as pl
import pytest

from toricnest import config
from toricnest.algebra.orders import grevlex
from toricnest.config import WalkSettings, create_test_settings
from toricnest.exceptions import CombinatorialLimitError, PreconditionError, VerificationFailure
from toricnest.formats.parsing import parse_configuration, read_text
from toricnest.groebner.binomials import MarkedBasis, MarkedBinomial
from toricnest.stats.fiber_walk import (
    enumerate_fiber,
    fiber_walk,
    move_matrix,
    walk_frame,
    write_walk,
)
from toricnest.toric.generators import toric_basis


@pytest.fixture
def coupon(fixtures_dir):
    C = parse_configuration(read_text(fixtures_dir / "coupon_base.cfg"))
    P = C.presentation()
    return P, toric_basis(C, grevlex(P.source), presentation=P)


class TestMoves:
    """Test cases for move_matrix."""

    def test_rows(self, coupon):
        """Test one tail - lead row per element."""
        _, G = coupon
        assert move_matrix(G).tolist() == [[1, -2, 1]]

    def test_empty(self, coupon):
        """Test an empty basis gives a matrix with no rows."""
        P, _ = coupon
        assert move_matrix(MarkedBasis(P.source, ())).shape == (0, 3)


class TestFiberWalk:
    """Test cases for fiber_walk."""

    def test_zero_steps(self, coupon):
        """Test zero steps returns only the start."""
        P, G = coupon
        walk = fiber_walk(P, G, (2, 0, 2), steps=0, seed=1)
        assert walk.states == ((2, 0, 2),)
        assert walk.steps == 0

    def test_stays_in_fiber(self, coupon):
        """Test every visited state lies in the enumerated fiber."""
        P, G = coupon
        walk = fiber_walk(P, G, (2, 0, 2), steps=500, seed=3, check_fibers=True)
        fiber = enumerate_fiber(P, (2, 0, 2))
        assert fiber == {(2, 0, 2), (1, 2, 1), (0, 4, 0)}
        assert walk.visited() <= fiber
        assert len(walk.states) == 501
        assert walk.accepted > 0

    def test_reaches_whole_fiber(self, coupon):
        """Test a long walk visits every state of a small fiber."""
        P, G = coupon
        walk = fiber_walk(P, G, (0, 4, 0), steps=2000, seed=0)
        assert walk.visited() == enumerate_fiber(P, (0, 4, 0))

    def test_deterministic(self, coupon):
        """Test a fixed seed repeats the walk."""
        P, G = coupon
        first = fiber_walk(P, G, (1, 2, 1), steps=100, seed=42)
        second = fiber_walk(P, G, (1, 2, 1), steps=100, seed=42)
        assert first.states == second.states

    def test_empty_basis_never_moves(self, coupon):
        """Test a walk without moves stays at the start."""
        P, _ = coupon
        walk = fiber_walk(P, MarkedBasis(P.source, ()), (1, 2, 1), steps=20, seed=0)
        assert walk.visited() == {(1, 2, 1)}
        assert walk.accepted == 0

    def test_monomial_start(self, coupon):
        """Test the start may be given as a monomial."""
        P, G = coupon
        walk = fiber_walk(P, G, P.source.monomial((1, 2, 1)), steps=5, seed=0)
        assert walk.states[0] == (1, 2, 1)

    def test_invalid_start(self, coupon):
        """Test wrong lengths, negative counts and negative step counts."""
        P, G = coupon
        with pytest.raises(PreconditionError):
            fiber_walk(P, G, (1, 2), steps=1)
        with pytest.raises(PreconditionError):
            fiber_walk(P, G, (1, -2, 1), steps=1)
        with pytest.raises(PreconditionError):
            fiber_walk(P, G, (1, 2, 1), steps=-1)

    def test_debug_mode_checks_fibers(self, coupon, monkeypatch):
        """Test debug mode turns on the per-step fiber check."""
        P, _ = coupon
        x = P.source
        off_fiber = MarkedBasis(x, (MarkedBinomial(x.monomial((1, 0, 0)), x.monomial((0, 1, 0))),))
        quiet = WalkSettings(check_fibers=False)
        monkeypatch.setattr(config, "settings", create_test_settings(debug=False, walk=quiet))
        fiber_walk(P, off_fiber, (2, 0, 2), steps=20, seed=0)
        monkeypatch.setattr(config, "settings", create_test_settings(debug=True, walk=quiet))
        with pytest.raises(VerificationFailure):
            fiber_walk(P, off_fiber, (2, 0, 2), steps=20, seed=0)


class TestEnumerateFiber:
    """Test cases for enumerate_fiber."""

    def test_cap(self, coupon):
        """Test the cap raises CombinatorialLimitError."""
        P, _ = coupon
        with pytest.raises(CombinatorialLimitError):
            enumerate_fiber(P, (0, 8, 0), cap=2)


class TestWalkFrame:
    """Test cases for walk_frame and write_walk."""

    def test_columns(self, coupon):
        """Test a step column followed by one Int64 column per variable."""
        P, G = coupon
        frame = walk_frame(fiber_walk(P, G, (1, 2, 1), steps=10, seed=5))
        assert frame.columns == ["step", *P.source.variables]
        assert frame.height == 11
        assert all(dtype == pl.Int64 for dtype in frame.dtypes)

    def test_write(self, coupon, tmp_path):
        """Test the CSV written to disk reads back with the same rows."""
        P, G = coupon
        walk = fiber_walk(P, G, (1, 2, 1), steps=10, seed=5)
        path = tmp_path / "walks" / "walk.csv"
        write_walk(walk, path)
        assert pl.read_csv(path).equals(walk_frame(walk))
