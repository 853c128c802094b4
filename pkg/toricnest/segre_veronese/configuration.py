"""
Configurations of Segre-Veronese type: all degree-tau monomials in t_1..t_d
whose window sums over [p, q] lie between given bounds.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import TypeAlias

from loguru import logger

from toricnest.algebra.ring import Exponents, Ring
from toricnest.exceptions import InfeasibleSpecError, PreconditionError
from toricnest.nested.system import index_string, type_of
from toricnest.toric.configuration import Configuration, Presentation

SortedIndexString: TypeAlias = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class WindowConstraint:
    """lower <= f_p + ... + f_q <= upper, with 1-based inclusive p..q."""

    p: int
    q: int
    lower: int
    upper: int

    def holds(self, f: Exponents) -> bool:
        return self.lower <= sum(f[self.p - 1 : self.q]) <= self.upper


@dataclass(frozen=True, slots=True)
class SegreVeroneseSpec:
    """Variable count d, degree tau and the window constraints."""

    d: int
    tau: int
    constraints: tuple[WindowConstraint, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if self.d < 1:
            raise PreconditionError(f"Need at least one variable, got d={self.d}")
        if self.tau < 2:
            raise PreconditionError(f"Degree tau must be at least 2, got {self.tau}")
        for c in self.constraints:
            if not 0 <= c.lower <= c.upper:
                raise PreconditionError(f"Window bounds must satisfy 0 <= min <= max: {c}")
            if not 1 <= c.p <= c.q <= self.d:
                raise PreconditionError(f"Window must satisfy 1 <= p <= q <= d: {c}")

    @property
    def n(self) -> int:
        return len(self.constraints)

    def admits(self, f: Exponents) -> bool:
        return sum(f) == self.tau and all(c.holds(f) for c in self.constraints)

    def ring(self) -> Ring:
        return Ring(tuple(f"t{j}" for j in range(1, self.d + 1)))


def sv_configuration(spec: SegreVeroneseSpec, ring: Ring | None = None) -> Configuration:
    """
    All monomials of degree tau satisfying every window constraint,
    lex-descending with t_1 largest.

    Raises:
        InfeasibleSpecError: if no monomial satisfies the constraints
    """
    ring = ring or spec.ring()
    if len(ring) != spec.d:
        raise PreconditionError(f"Ring has {len(ring)} variables, spec needs {spec.d}")
    members = []
    for combo in combinations_with_replacement(range(spec.d), spec.tau):
        f = [0] * spec.d
        for j in combo:
            f[j] += 1
        if spec.admits(tuple(f)):
            members.append(tuple(f))
    if not members:
        raise InfeasibleSpecError(
            "Window constraints admit no monomial", context={"d": spec.d, "tau": spec.tau}
        )
    members.sort(reverse=True)
    weight = tuple(Fraction(1, spec.tau) for _ in range(spec.d))
    logger.debug(f"Segre-Veronese configuration d={spec.d} tau={spec.tau}: {len(members)} members")
    return Configuration(ring, tuple(ring.monomial(f) for f in members), weight)


def veronese_spec(d: int, tau: int) -> SegreVeroneseSpec:
    return SegreVeroneseSpec(d, tau, tuple(WindowConstraint(j, j, 0, tau) for j in range(1, d + 1)))


def squarefree_veronese_spec(d: int, tau: int) -> SegreVeroneseSpec:
    return SegreVeroneseSpec(d, tau, tuple(WindowConstraint(j, j, 0, 1) for j in range(1, d + 1)))


def segre_spec(sizes: Sequence[int]) -> SegreVeroneseSpec:
    """One factor from each block of consecutive variables."""
    constraints = []
    start = 1
    for size in sizes:
        if size < 1:
            raise PreconditionError(f"Segre block sizes must be positive, got {list(sizes)}")
        constraints.append(WindowConstraint(start, start + size - 1, 1, 1))
        start += size
    return SegreVeroneseSpec(start - 1, len(sizes), tuple(constraints))


def veronese_configuration(d: int, tau: int) -> Configuration:
    return sv_configuration(veronese_spec(d, tau))


def squarefree_veronese_configuration(d: int, tau: int) -> Configuration:
    return sv_configuration(squarefree_veronese_spec(d, tau))


def segre_configuration(sizes: Sequence[int]) -> Configuration:
    return sv_configuration(segre_spec(sizes))


def infer_segre_veronese_spec(A: Configuration) -> SegreVeroneseSpec | None:
    """
    A spec generating exactly the members of A, or None.

    Every window gets the tightest bounds the members allow; A is of
    Segre-Veronese type exactly when these bounds cut out A itself. Windows
    whose bounds are vacuous are left out.
    """
    if not A.members:
        return None
    degrees = {m.degree for m in A.members}
    if len(degrees) != 1:
        return None
    tau = degrees.pop()
    d = len(A.ring)
    if tau < 2:
        return None
    constraints = []
    for p in range(1, d + 1):
        for q in range(p, d + 1):
            sums = [sum(m.exponents[p - 1 : q]) for m in A.members]
            lower, upper = min(sums), max(sums)
            if lower == 0 and upper == tau:
                continue
            constraints.append(WindowConstraint(p, q, lower, upper))
    spec = SegreVeroneseSpec(d, tau, tuple(constraints))
    generated = {m.exponents for m in sv_configuration(spec, A.ring).members}
    if generated != {m.exponents for m in A.members}:
        return None
    return spec


def sort_string(s: Sequence[int], d: int | None = None) -> SortedIndexString:
    """
    Weakly increasing rearrangement of an index string over 1..d.

    Raises:
        PreconditionError: if an entry lies outside 1..d
    """
    for x in s:
        if x < 1 or (d is not None and x > d):
            raise PreconditionError(f"Index {x} outside 1..{d}")
    return tuple(sorted(s))


def sv_presentation(C: Configuration) -> Presentation:
    """Presentation variables `x_<sorted indices>`, e.g. `x_13` for t_1 t_3."""
    names = tuple(f"x_{index_string(type_of(m.exponents), len(C.ring))}" for m in C.members)
    return Presentation(Ring(names), C)
