"""Text formats for configurations, nested systems, specs and marked bases."""

from toricnest.formats.parsing import (
    NestedInput,
    format_basis,
    format_configuration,
    format_sv_spec,
    parse_basis,
    parse_binomial,
    parse_configuration,
    parse_counts,
    parse_nested_system,
    parse_sv_spec,
    read_text,
)

__all__ = [
    "NestedInput",
    "format_basis",
    "format_configuration",
    "format_sv_spec",
    "parse_basis",
    "parse_binomial",
    "parse_configuration",
    "parse_counts",
    "parse_nested_system",
    "parse_sv_spec",
    "read_text",
]
