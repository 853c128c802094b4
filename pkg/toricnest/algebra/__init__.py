"""Exact monomial arithmetic, monomial orders and rational feasibility."""

from toricnest.algebra.feasibility import LinearConstraint, find_feasible_point
from toricnest.algebra.orders import MonomialOrder, compare, grevlex, grlex, lex, parse_order, weighted
from toricnest.algebra.ring import (
    Monomial,
    Ring,
    divides,
    format_monomial,
    gcd,
    lcm,
    mul,
    parse_monomial,
    quotient,
)

__all__ = [
    "LinearConstraint",
    "Monomial",
    "MonomialOrder",
    "Ring",
    "compare",
    "divides",
    "find_feasible_point",
    "format_monomial",
    "gcd",
    "grevlex",
    "grlex",
    "lcm",
    "lex",
    "mul",
    "parse_monomial",
    "parse_order",
    "quotient",
    "weighted",
]
