"""
Configurations, their presentation rings and evaluation maps.

A configuration is a duplicate-free list of monomials admitting nonnegative
rational weights w with w . a = 1 for every member exponent vector a.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from toricnest.algebra.feasibility import LinearConstraint, find_feasible_point
from toricnest.algebra.ring import Monomial, Ring
from toricnest.exceptions import (
    DuplicateMemberError,
    NotAConfigurationError,
    PreconditionError,
    RingMismatchError,
)
from toricnest.models.types import Relation


@dataclass(frozen=True, slots=True)
class Configuration:
    """A ring, its ordered members and an optional weight certificate."""

    ring: Ring
    members: tuple[Monomial, ...]
    weight: tuple[Fraction, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple(self.members))
        seen: set[tuple[int, ...]] = set()
        for m in self.members:
            if m.ring != self.ring:
                raise RingMismatchError(f"Member {m} is not in the configuration ring")
            if m.exponents in seen:
                raise DuplicateMemberError(f"Duplicate configuration member {m}")
            seen.add(m.exponents)
        if self.weight is not None:
            weight = tuple(Fraction(w) for w in self.weight)
            if len(weight) != len(self.ring):
                raise ValueError(f"Weight needs {len(self.ring)} entries, got {len(weight)}")
            if any(w < 0 for w in weight):
                raise NotAConfigurationError("Configuration weights must be nonnegative")
            for m in self.members:
                total = sum((w * e for w, e in zip(weight, m.exponents, strict=True)), Fraction(0))
                if total != 1:
                    raise NotAConfigurationError(
                        f"Weight gives {total} instead of 1 on member {m}",
                        context={"weight": [str(w) for w in weight]},
                    )
            object.__setattr__(self, "weight", weight)

    def __len__(self) -> int:
        return len(self.members)

    def index(self, m: Monomial) -> int:
        try:
            return self.members.index(m)
        except ValueError:
            raise PreconditionError(f"{m} is not a configuration member") from None

    def presentation(self, names: Sequence[str] | None = None) -> Presentation:
        """The presentation ring with one variable per member."""
        names = tuple(names) if names is not None else tuple(presentation_name(m) for m in self.members)
        return Presentation(Ring(names), self)


def presentation_name(m: Monomial, prefix: str = "x_") -> str:
    """`x_` followed by the member's variable names with multiplicity, joined by dots."""
    factors: list[str] = []
    for name, e in zip(m.ring.variables, m.exponents, strict=True):
        factors.extend([name] * e)
    return prefix + ".".join(factors)


def check_configuration(members: Sequence[Monomial], ring: Ring | None = None) -> Configuration:
    """
    Validate `members` and find a weight certificate.

    Raises:
        DuplicateMemberError: if a monomial is listed twice
        NotAConfigurationError: if no nonnegative w gives w . a = 1 on all members
    """
    if not members:
        raise PreconditionError("A configuration needs at least one member")
    ring = ring or members[0].ring
    seen: set[tuple[int, ...]] = set()
    for m in members:
        if m.exponents in seen:
            raise DuplicateMemberError(f"Duplicate configuration member {m}")
        seen.add(m.exponents)

    constraints = [
        LinearConstraint(tuple(Fraction(e) for e in m.exponents), Relation.EQ, Fraction(1))
        for m in members
    ]
    weight = find_feasible_point(constraints, len(ring))
    if weight is None:
        raise NotAConfigurationError(
            "No nonnegative weight vector grades these monomials",
            context={"members": [str(m) for m in members]},
        )
    logger.debug(f"Configuration of {len(members)} members graded by {[str(w) for w in weight]}")
    return Configuration(ring, tuple(members), weight)


@dataclass(frozen=True, slots=True)
class Presentation:
    """The map from presentation variables onto configuration members."""

    source: Ring
    configuration: Configuration

    def __post_init__(self) -> None:
        if len(self.source) != len(self.configuration.members):
            raise ValueError("Presentation ring needs one variable per member")

    @property
    def target(self) -> Ring:
        return self.configuration.ring

    def evaluate(self, m: Monomial) -> Monomial:
        return evaluate(self, m)

    def variable_for(self, member: Monomial) -> Monomial:
        return self.source.gen(self.configuration.index(member))

    def image_exponents(self, e: Sequence[int]) -> tuple[int, ...]:
        """Image of a source exponent vector, without building monomials."""
        total = [0] * len(self.target)
        for k, count in enumerate(e):
            if count:
                for i, a in enumerate(self.configuration.members[k].exponents):
                    if a:
                        total[i] += count * a
        return tuple(total)


def evaluate(P: Presentation, m: Monomial) -> Monomial:
    """Multiplicative image of a source monomial."""
    if m.ring != P.source:
        raise RingMismatchError("Monomial is not in the presentation ring")
    return Monomial(P.target, P.image_exponents(m.exponents))
