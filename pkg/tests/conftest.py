"""Shared fixtures: fixture file paths and the worked nested systems."""

from pathlib import Path

import pytest

from toricnest.formats.parsing import parse_nested_system, read_text
from toricnest.nested.system import NestedSystem, build_nested

FIXTURES = Path(__file__).parent / "fixtures"


def load_system(name: str) -> NestedSystem:
    parsed = parse_nested_system(read_text(FIXTURES / name))
    return build_nested(
        parsed.base,
        parsed.inner,
        base_order=parsed.base_order,
        inner_orders=parsed.inner_orders,
    )


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def coupon_system() -> NestedSystem:
    """A = {t1^2, t1 t2, t2^2} with two copies of the degree-two Veronese of a line."""
    return load_system("coupon.nested")


@pytest.fixture(scope="session")
def line_system() -> NestedSystem:
    """A = {t1^2}, B_1 = {u1, u2, u3}."""
    return load_system("veronese_line.nested")


@pytest.fixture(scope="session")
def exam_system() -> NestedSystem:
    """Two of three groups, two of three problems per chosen group."""
    return load_system("exam.nested")
