"""Enums and report models."""

from toricnest.models.reports import RunReport, Verdicts
from toricnest.models.types import (
    Comparison,
    ConstructionMode,
    LPMethod,
    OrderKind,
    Provenance,
    Relation,
)

__all__ = [
    "Comparison",
    "ConstructionMode",
    "LPMethod",
    "OrderKind",
    "Provenance",
    "Relation",
    "RunReport",
    "Verdicts",
]
