"""toricnest - Toric ideals of nested configurations

Exact binomial Gröbner bases for toric ideals, nested configurations
A(B_1, ..., B_d), their quadratic Gröbner bases and sorting bases of
Segre-Veronese configurations.
"""

__version__ = "0.1.0"

from toricnest.groebner import MarkedBasis, buchberger
from toricnest.nested import build_nested, main1_basis
from toricnest.segre_veronese import main2_basis, sorting_gb
from toricnest.toric import Configuration, check_configuration, toric_generators

__all__ = [
    "Configuration",
    "MarkedBasis",
    "buchberger",
    "build_nested",
    "check_configuration",
    "main1_basis",
    "main2_basis",
    "sorting_gb",
    "toric_generators",
]
