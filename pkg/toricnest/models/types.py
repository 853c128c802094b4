# toricnest/models/types.py
"""Shared enums for orders, bases and run modes."""

from __future__ import annotations

from enum import Enum, IntEnum


class OrderKind(str, Enum):
    """Monomial order families."""

    LEX = "lex"
    GRLEX = "grlex"
    GREVLEX = "grevlex"
    WEIGHTED = "weighted"


class Comparison(IntEnum):
    """Result of comparing two monomials."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


class Provenance(str, Enum):
    """How the markings of a basis were obtained."""

    CONSTRUCTED = "constructed"
    MARKED_ONLY = "marked-only"


class ConstructionMode(str, Enum):
    """Basis construction used by the nested command."""

    MAIN1 = "main1"
    MAIN2 = "main2"
    ORACLE = "oracle"


class LPMethod(str, Enum):
    """Exact feasibility back ends."""

    AUTO = "auto"
    FOURIER_MOTZKIN = "fourier_motzkin"
    SIMPLEX = "simplex"


class Relation(str, Enum):
    """Linear constraint relations."""

    GE = ">="
    LE = "<="
    EQ = "=="
