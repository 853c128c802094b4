"""Binomial Gröbner bases: reduction, Buchberger and verification."""

from toricnest.groebner.binomials import Binomial, MarkedBasis, MarkedBinomial, orient
from toricnest.groebner.buchberger import buchberger, s_pair
from toricnest.groebner.reduction import (
    is_standard,
    normal_form,
    normal_form_binomial,
    reduces_to_zero,
)
from toricnest.groebner.verification import (
    WeightCertificate,
    check_groebner_basis,
    initial_ideal_generators,
    is_groebner_basis_of,
    is_reduced,
    is_squarefree_initial,
    max_degree,
    verify_marking,
)

__all__ = [
    "Binomial",
    "MarkedBasis",
    "MarkedBinomial",
    "WeightCertificate",
    "buchberger",
    "check_groebner_basis",
    "initial_ideal_generators",
    "is_groebner_basis_of",
    "is_reduced",
    "is_squarefree_initial",
    "is_standard",
    "max_degree",
    "normal_form",
    "normal_form_binomial",
    "orient",
    "reduces_to_zero",
    "s_pair",
    "verify_marking",
]
