"""
Rings of named variables and monomials with checked exponent arithmetic.

Monomials are dense exponent tuples tied to a Ring. All values are frozen and
every function here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import re
from typing import TypeAlias

from toricnest.exceptions import (
    ExponentOverflowError,
    MonomialParseError,
    NotDivisibleError,
    RingMismatchError,
)

Exponents: TypeAlias = tuple[int, ...]

EXPONENT_LIMIT = 2**63 - 1
VARIABLE_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_.]*")
_FACTOR = re.compile(r"^(?P<name>[A-Za-z_][A-Za-z0-9_.]*)(?:\^(?P<power>\d+))?$")


@dataclass(frozen=True, slots=True)
class Ring:
    """
    An ordered list of distinct variable names.

    `display_indices` optionally attaches index tuples to variables (for
    example the group and member number of a z variable). They are metadata
    only; algebra always uses positions.
    """

    variables: tuple[str, ...]
    display_indices: tuple[tuple[int, ...], ...] | None = field(default=None, compare=False)
    _positions: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        positions: dict[str, int] = {}
        for k, name in enumerate(self.variables):
            if not VARIABLE_NAME.fullmatch(name):
                raise MonomialParseError(f"Invalid variable name: {name!r}")
            if name in positions:
                raise MonomialParseError(f"Duplicate variable name: {name!r}")
            positions[name] = k
        object.__setattr__(self, "_positions", positions)
        if self.display_indices is not None and len(self.display_indices) != len(self.variables):
            raise ValueError("display_indices must have one entry per variable")

    def __len__(self) -> int:
        return len(self.variables)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        """Position of a variable, raising MonomialParseError for unknown names."""
        try:
            return self._positions[name]
        except KeyError:
            raise MonomialParseError(f"Unknown variable {name!r}") from None

    def __contains__(self, name: object) -> bool:
        return name in self._positions

    def unit(self) -> Monomial:
        return Monomial(self, (0,) * len(self.variables))

    def gen(self, name_or_index: str | int) -> Monomial:
        """The monomial consisting of one variable."""
        k = self.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        exps = [0] * len(self.variables)
        exps[k] = 1
        return Monomial(self, tuple(exps))

    def monomial(self, exponents: Exponents | list[int]) -> Monomial:
        return Monomial(self, tuple(exponents))

    def gens(self) -> list[Monomial]:
        return [self.gen(k) for k in range(len(self.variables))]

    def is_disjoint(self, other: Ring) -> bool:
        return not set(self.variables) & set(other.variables)


@dataclass(frozen=True, slots=True)
class Monomial:
    """A monomial over `ring` given by its exponent vector."""

    ring: Ring
    exponents: Exponents

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(self.exponents))
        if len(self.exponents) != len(self.ring.variables):
            raise ValueError(
                f"Expected {len(self.ring.variables)} exponents, got {len(self.exponents)}"
            )
        total = 0
        for e in self.exponents:
            if e < 0:
                raise ValueError(f"Negative exponent in {self.exponents}")
            total += e
            if e > EXPONENT_LIMIT or total > EXPONENT_LIMIT:
                raise ExponentOverflowError(
                    "Exponent or degree exceeds 64-bit range",
                    context={"exponents": self.exponents},
                )

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k for k, e in enumerate(self.exponents) if e)

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        return mul(self, other)

    def __str__(self) -> str:
        return format_monomial(self)


def _check_same_ring(a: Monomial, b: Monomial) -> None:
    if a.ring is not b.ring and a.ring != b.ring:
        raise RingMismatchError(
            "Monomials belong to different rings",
            context={"left": a.ring.variables, "right": b.ring.variables},
        )


def mul(a: Monomial, b: Monomial) -> Monomial:
    """Componentwise exponent sum."""
    _check_same_ring(a, b)
    return Monomial(a.ring, tuple(x + y for x, y in zip(a.exponents, b.exponents, strict=True)))


def divides(a: Monomial, b: Monomial) -> bool:
    """True when every exponent of `a` is at most the matching exponent of `b`."""
    _check_same_ring(a, b)
    return all(x <= y for x, y in zip(a.exponents, b.exponents, strict=True))


def quotient(b: Monomial, a: Monomial) -> Monomial:
    """Return b / a, raising NotDivisibleError when `a` does not divide `b`."""
    if not divides(a, b):
        raise NotDivisibleError(f"{a} does not divide {b}")
    return Monomial(b.ring, tuple(y - x for x, y in zip(a.exponents, b.exponents, strict=True)))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_same_ring(a, b)
    return Monomial(a.ring, tuple(map(max, a.exponents, b.exponents)))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_same_ring(a, b)
    return Monomial(a.ring, tuple(map(min, a.exponents, b.exponents)))


def format_monomial(m: Monomial) -> str:
    """Render as `t1^2*t2`; the unit monomial is `1`."""
    parts = []
    for name, e in zip(m.ring.variables, m.exponents, strict=True):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def parse_monomial(text: str, ring: Ring, *, line_number: int | None = None) -> Monomial:
    """
    Parse the `name^k*name` syntax strictly.

    Repeated factors multiply, so `t1*t1` equals `t1^2`.
    """
    text = text.strip()
    if not text:
        raise MonomialParseError("Empty monomial", line_number=line_number)
    if text == "1":
        return ring.unit()
    exps = [0] * len(ring.variables)
    for raw in text.split("*"):
        factor = raw.strip()
        match = _FACTOR.match(factor)
        if match is None:
            raise MonomialParseError(f"Malformed factor {factor!r}", line_number=line_number)
        name = match.group("name")
        if name not in ring:
            raise MonomialParseError(f"Unknown variable {name!r}", line_number=line_number)
        power = int(match.group("power") or 1)
        exps[ring.index(name)] += power
    return Monomial(ring, tuple(exps))
