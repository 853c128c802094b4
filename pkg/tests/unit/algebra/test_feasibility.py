"""Tests for exact rational feasibility."""

from fractions import Fraction

import numpy as np
import pytest

from toricnest.algebra.feasibility import (
    LinearConstraint,
    find_feasible_point,
    fourier_motzkin_feasible,
    simplex_feasible,
)
from toricnest.config import FeasibilitySettings
from toricnest.models.types import LPMethod, Relation

GE, LE, EQ = Relation.GE, Relation.LE, Relation.EQ


def c(coeffs, relation, rhs):
    return LinearConstraint(tuple(Fraction(x) for x in coeffs), relation, Fraction(rhs))


SOLVERS = [
    pytest.param(lambda cs, n: fourier_motzkin_feasible(cs, n), id="fourier_motzkin"),
    pytest.param(simplex_feasible, id="simplex"),
]


class TestFeasibility:
    """Both back ends on small systems."""

    @pytest.mark.parametrize("solve", SOLVERS)
    def test_configuration_weight(self, solve):
        """Test the weight of {t1^2, t1 t2, t2^2} is (1/2, 1/2)."""
        constraints = [c((2, 0), EQ, 1), c((1, 1), EQ, 1), c((0, 2), EQ, 1)]
        point = solve(constraints, 2)
        assert point == (Fraction(1, 2), Fraction(1, 2))

    @pytest.mark.parametrize("solve", SOLVERS)
    def test_separating_weights(self, solve):
        """Test a weight with w . (1, -2, 1) >= 1 exists."""
        constraints = [c((1, -2, 1), GE, 1)]
        point = solve(constraints, 3)
        assert point is not None
        assert all(con.holds(point) for con in constraints)
        assert all(x >= 0 for x in point)

    @pytest.mark.parametrize("solve", SOLVERS)
    def test_cycle_is_infeasible(self, solve):
        """Test w . d >= 1 and w . (-d) >= 1 cannot both hold."""
        constraints = [c((1, -1), GE, 1), c((-1, 1), GE, 1)]
        assert solve(constraints, 2) is None

    @pytest.mark.parametrize("solve", SOLVERS)
    def test_nonnegativity_enforced(self, solve):
        """Test x1 + x2 <= -1 is infeasible over the orthant."""
        assert solve([c((1, 1), LE, -1)], 2) is None

    @pytest.mark.parametrize("solve", SOLVERS)
    def test_empty_system(self, solve):
        """Test no constraints gives the origin."""
        assert solve([], 3) == (Fraction(0),) * 3

    def test_solvers_agree_on_random_systems(self):
        """Test both back ends decide feasibility identically."""
        rng = np.random.default_rng(11)
        for _ in range(60):
            n = int(rng.integers(1, 5))
            constraints = [
                c(
                    tuple(int(x) for x in rng.integers(-3, 4, size=n)),
                    [GE, LE, EQ][int(rng.integers(0, 3))],
                    int(rng.integers(-2, 3)),
                )
                for _ in range(int(rng.integers(1, 5)))
            ]
            fm = fourier_motzkin_feasible(constraints, n)
            sx = simplex_feasible(constraints, n)
            assert (fm is None) == (sx is None)
            for point in (fm, sx):
                if point is not None:
                    assert all(con.holds(point) for con in constraints)


class TestFindFeasiblePoint:
    """Test cases for the dispatching entry point."""

    @pytest.mark.parametrize("method", list(LPMethod))
    def test_methods(self, method):
        """Test every method finds the same kind of point."""
        constraints = [c((1, 2, 0, 0, 0, 0, 0, 0), GE, 3)]
        point = find_feasible_point(constraints, 8, method=method)
        assert point is not None
        assert constraints[0].holds(point)

    def test_auto_falls_back_to_simplex(self):
        """Test a tiny elimination cap forces the simplex in auto mode."""
        tiny = FeasibilitySettings(fourier_motzkin_max_constraints=1)
        constraints = [c((1, -1, 1), GE, 1), c((-1, 1, 1), GE, 1), c((1, 1, -1), GE, 1)]
        point = find_feasible_point(constraints, 3, lp_settings=tiny)
        assert point is not None
        assert all(con.holds(point) for con in constraints)

    def test_wrong_width(self):
        """Test constraint width must match the variable count."""
        with pytest.raises(ValueError):
            find_feasible_point([c((1, 1), GE, 1)], 3)
