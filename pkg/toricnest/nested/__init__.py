"""Nested configurations, standard expressions and their quadratic Gröbner bases."""

from toricnest.nested.bases import main1_basis
from toricnest.nested.maps import KeyLemmaResult, PhiMaps, keylemma_test, phi
from toricnest.nested.system import (
    NestedSystem,
    StandardExpression,
    build_nested,
    standard_expression,
)

__all__ = [
    "KeyLemmaResult",
    "NestedSystem",
    "PhiMaps",
    "StandardExpression",
    "build_nested",
    "keylemma_test",
    "main1_basis",
    "phi",
    "standard_expression",
]
