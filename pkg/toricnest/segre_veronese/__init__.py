"""Segre-Veronese configurations and sorting Gröbner bases."""

from toricnest.segre_veronese.bases import main2_basis, sorted_rewrite, sorting_gb
from toricnest.segre_veronese.configuration import (
    SegreVeroneseSpec,
    WindowConstraint,
    infer_segre_veronese_spec,
    segre_configuration,
    segre_spec,
    sort_string,
    squarefree_veronese_configuration,
    squarefree_veronese_spec,
    sv_configuration,
    sv_presentation,
    veronese_configuration,
    veronese_spec,
)

__all__ = [
    "SegreVeroneseSpec",
    "WindowConstraint",
    "infer_segre_veronese_spec",
    "main2_basis",
    "segre_configuration",
    "segre_spec",
    "sort_string",
    "sorted_rewrite",
    "sorting_gb",
    "squarefree_veronese_configuration",
    "squarefree_veronese_spec",
    "sv_configuration",
    "sv_presentation",
    "veronese_configuration",
    "veronese_spec",
]
