"""Configurations, evaluation maps and toric ideal oracles."""

from toricnest.toric.configuration import (
    Configuration,
    Presentation,
    check_configuration,
    evaluate,
    presentation_name,
)
from toricnest.toric.generators import kernel_enumerate, toric_basis, toric_generators
from toricnest.toric.lattice import integer_kernel

__all__ = [
    "Configuration",
    "Presentation",
    "check_configuration",
    "evaluate",
    "integer_kernel",
    "kernel_enumerate",
    "presentation_name",
    "toric_basis",
    "toric_generators",
]
