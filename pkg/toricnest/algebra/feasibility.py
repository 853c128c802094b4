"""
Exact rational linear feasibility over the nonnegative orthant.

Two back ends share one interface: Fourier-Motzkin elimination with
back-substitution for small systems, and a dictionary simplex (auxiliary
variable, Bland's rule) for the rest. All arithmetic is in Fractions.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import TypeAlias

from loguru import logger

from toricnest.config import FeasibilitySettings, get_settings
from toricnest.exceptions import CombinatorialLimitError
from toricnest.models.types import LPMethod, Relation

Point: TypeAlias = tuple[Fraction, ...]

# a . x <= b
_Row: TypeAlias = tuple[tuple[Fraction, ...], Fraction]


@dataclass(frozen=True, slots=True)
class LinearConstraint:
    """`coefficients . x  relation  rhs`."""

    coefficients: tuple[Fraction, ...]
    relation: Relation
    rhs: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))
        object.__setattr__(self, "relation", Relation(self.relation))
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    def holds(self, x: Sequence[Fraction]) -> bool:
        lhs = sum((c * v for c, v in zip(self.coefficients, x, strict=True)), Fraction(0))
        if self.relation is Relation.GE:
            return lhs >= self.rhs
        if self.relation is Relation.LE:
            return lhs <= self.rhs
        return lhs == self.rhs


def _as_upper_rows(constraints: Sequence[LinearConstraint]) -> list[_Row]:
    rows: list[_Row] = []
    for c in constraints:
        if c.relation in (Relation.LE, Relation.EQ):
            rows.append((c.coefficients, c.rhs))
        if c.relation in (Relation.GE, Relation.EQ):
            rows.append((tuple(-a for a in c.coefficients), -c.rhs))
    return rows


def _normalize(row: _Row) -> _Row:
    """Scale so the largest absolute coefficient is 1; keeps duplicate detection exact."""
    coeffs, rhs = row
    scale = max((abs(a) for a in coeffs), default=Fraction(0))
    if scale == 0:
        return coeffs, rhs
    return tuple(a / scale for a in coeffs), rhs / scale


def fourier_motzkin_feasible(
    constraints: Sequence[LinearConstraint],
    n_vars: int,
    *,
    max_constraints: int | None = None,
) -> Point | None:
    """
    Decide feasibility of `constraints` together with x >= 0.

    Variables are eliminated from the last to the first; each stage is kept so
    a point can be rebuilt by choosing every variable at its lower bound.

    Raises:
        CombinatorialLimitError: if a stage grows past `max_constraints`
    """
    cap = max_constraints or get_settings().feasibility.fourier_motzkin_max_constraints
    system = _as_upper_rows(constraints)
    for k in range(n_vars):
        unit = tuple(Fraction(-1) if i == k else Fraction(0) for i in range(n_vars))
        system.append((unit, Fraction(0)))
    system = list(dict.fromkeys(_normalize(r) for r in system))

    stages: list[list[_Row]] = [system]
    for k in reversed(range(n_vars)):
        current = stages[-1]
        upper = [r for r in current if r[0][k] > 0]
        lower = [r for r in current if r[0][k] < 0]
        rest = [r for r in current if r[0][k] == 0]
        combined: dict[_Row, None] = dict.fromkeys(rest)
        for up_coeffs, up_rhs in upper:
            for lo_coeffs, lo_rhs in lower:
                lam, mu = -lo_coeffs[k], up_coeffs[k]
                coeffs = tuple(lam * a + mu * b for a, b in zip(up_coeffs, lo_coeffs, strict=True))
                combined[_normalize((coeffs, lam * up_rhs + mu * lo_rhs))] = None
                if len(combined) > cap:
                    raise CombinatorialLimitError(
                        f"Fourier-Motzkin stage exceeded {cap} constraints",
                        context={"variable": k, "n_vars": n_vars},
                    )
        stages.append(list(combined))
        logger.debug(f"Fourier-Motzkin eliminated x{k}: {len(combined)} constraints remain")

    if any(rhs < 0 for _, rhs in stages[-1]):
        return None

    # stages[s] involves x0 .. x_{n-1-s}; rebuild x0 first
    point = [Fraction(0)] * n_vars
    for k in range(n_vars):
        stage = stages[n_vars - 1 - k]
        lower_bound: Fraction | None = None
        upper_bound: Fraction | None = None
        for coeffs, rhs in stage:
            a = coeffs[k]
            if a == 0:
                continue
            slack = rhs - sum((coeffs[i] * point[i] for i in range(k)), Fraction(0))
            bound = slack / a
            if a > 0:
                upper_bound = bound if upper_bound is None else min(upper_bound, bound)
            else:
                lower_bound = bound if lower_bound is None else max(lower_bound, bound)
        value = lower_bound if lower_bound is not None else Fraction(0)
        if upper_bound is not None and value > upper_bound:
            raise AssertionError("Fourier-Motzkin back-substitution left an empty interval")
        point[k] = value
    return tuple(point)


def simplex_feasible(constraints: Sequence[LinearConstraint], n_vars: int) -> Point | None:
    """
    Decide feasibility of `constraints` together with x >= 0 by phase-one simplex.

    The auxiliary problem minimizes x0 subject to A x - x0 <= b; the system is
    feasible exactly when that minimum is 0. Bland's rule prevents cycling.
    """
    rows = _as_upper_rows(constraints)
    m = len(rows)
    if m == 0 or all(rhs >= 0 for _, rhs in rows):
        return tuple(Fraction(0) for _ in range(n_vars))

    aux = n_vars
    width = n_vars + 1 + m
    # tableau row i: sum_j T[i][j] x_j = T[i][-1], basis[i] has coefficient 1
    tableau: list[list[Fraction]] = []
    for i, (coeffs, rhs) in enumerate(rows):
        row = [*coeffs, Fraction(-1)] + [Fraction(0)] * m + [rhs]
        row[n_vars + 1 + i] = Fraction(1)
        tableau.append(row)
    basis = [n_vars + 1 + i for i in range(m)]

    # minimize x0: objective value = sum cost_j x_j + constant
    cost = [Fraction(0)] * width
    cost[aux] = Fraction(1)
    constant = Fraction(0)

    def pivot(r: int, c: int) -> None:
        nonlocal constant
        pivot_row = tableau[r]
        p = pivot_row[c]
        tableau[r] = pivot_row = [v / p for v in pivot_row]
        for i, row in enumerate(tableau):
            if i != r and row[c] != 0:
                f = row[c]
                tableau[i] = [v - f * pv for v, pv in zip(row, pivot_row, strict=True)]
        f = cost[c]
        if f != 0:
            for j in range(width):
                cost[j] -= f * pivot_row[j]
            constant += f * pivot_row[-1]
        basis[r] = c

    leaving = min(range(m), key=lambda i: (tableau[i][-1], i))
    pivot(leaving, aux)

    iterations = 0
    while True:
        entering = next((j for j in range(width) if cost[j] < 0 and j not in basis), None)
        if entering is None:
            break
        best: tuple[Fraction, int, int] | None = None
        for i, row in enumerate(tableau):
            if row[entering] > 0:
                candidate = (row[-1] / row[entering], basis[i], i)
                if best is None or candidate < best:
                    best = candidate
        if best is None:
            raise AssertionError("Auxiliary simplex problem cannot be unbounded")
        pivot(best[2], entering)
        iterations += 1

    logger.debug(f"Simplex finished after {iterations} pivots, auxiliary optimum {constant}")
    if constant != 0:
        return None
    point = [Fraction(0)] * n_vars
    for i, var in enumerate(basis):
        if var < n_vars:
            point[var] = tableau[i][-1]
    return tuple(point)


def find_feasible_point(
    constraints: Sequence[LinearConstraint],
    n_vars: int,
    *,
    method: LPMethod | None = None,
    lp_settings: FeasibilitySettings | None = None,
) -> Point | None:
    """
    Return a nonnegative rational point satisfying every constraint, or None.

    In auto mode Fourier-Motzkin handles systems with few variables and the
    simplex takes over above the threshold or when elimination blows up.
    """
    lp_settings = lp_settings or get_settings().feasibility
    method = LPMethod(method or lp_settings.method)
    for c in constraints:
        if len(c.coefficients) != n_vars:
            raise ValueError(f"Constraint has {len(c.coefficients)} coefficients, expected {n_vars}")

    if method is LPMethod.SIMPLEX:
        point = simplex_feasible(constraints, n_vars)
    elif method is LPMethod.FOURIER_MOTZKIN:
        point = fourier_motzkin_feasible(
            constraints, n_vars, max_constraints=lp_settings.fourier_motzkin_max_constraints
        )
    elif n_vars <= lp_settings.fourier_motzkin_max_variables:
        try:
            point = fourier_motzkin_feasible(
                constraints, n_vars, max_constraints=lp_settings.fourier_motzkin_max_constraints
            )
        except CombinatorialLimitError as exc:
            logger.debug(f"Falling back to simplex: {exc}")
            point = simplex_feasible(constraints, n_vars)
    else:
        point = simplex_feasible(constraints, n_vars)

    if point is not None and not all(c.holds(point) for c in constraints):
        raise AssertionError(f"Feasibility back end {method.value} returned an invalid point")
    return point
