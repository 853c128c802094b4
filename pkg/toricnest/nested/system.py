"""
Nested configurations A(B_1, ..., B_d).

Every member is a product of inner members whose group multiset is a member
of the base configuration A. Members are stored with their standard
expression: the factorization whose per-group z-monomials are standard
modulo the inner Gröbner bases.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product

from loguru import logger

from toricnest.algebra.orders import MonomialOrder, parse_order
from toricnest.algebra.ring import Exponents, Monomial, Ring
from toricnest.config import get_settings
from toricnest.exceptions import (
    NoFactorizationError,
    PreconditionError,
    RingMismatchError,
    SharedVariableError,
)
from toricnest.groebner.binomials import MarkedBasis
from toricnest.groebner.reduction import basis_rules, lead_divides, reduce_exponents
from toricnest.models.types import OrderKind
from toricnest.nested.maps import PhiMaps
from toricnest.toric.configuration import Configuration, Presentation, check_configuration
from toricnest.toric.generators import toric_basis

OrderSpec = MonomialOrder | OrderKind | str | None


@dataclass(frozen=True, slots=True)
class StandardExpression:
    """A factorization as (group, index) pairs, both 1-based, sorted."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(sorted(self.factors)))

    @property
    def type_indices(self) -> tuple[int, ...]:
        """Upper indices in weakly increasing order."""
        return tuple(i for i, _ in self.factors)

    def group(self, i: int) -> tuple[int, ...]:
        """Lower indices of the group-i factors, weakly increasing."""
        return tuple(j for g, j in self.factors if g == i)

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return "*".join(f"m{i}_{j}" for i, j in self.factors)


def index_string(indices: Sequence[int], width: int) -> str:
    """Digits run together when every index is a single digit, dot-joined otherwise."""
    sep = "" if width <= 9 else "."
    return sep.join(str(i) for i in indices)


def type_of(exponents: Exponents) -> tuple[int, ...]:
    """Weakly increasing 1-based index string of a base monomial."""
    return tuple(i + 1 for i, e in enumerate(exponents) for _ in range(e))


def base_presentation(A: Configuration) -> Presentation:
    """
    The y ring of A: one variable per member, members sorted lex-descending,
    each named after its index string (`y_11`, `y_12`, ...).
    """
    members = tuple(sorted(A.members, key=lambda m: m.exponents, reverse=True))
    ordered = Configuration(A.ring, members, A.weight)
    d = len(A.ring)
    types = [type_of(m.exponents) for m in members]
    ring = Ring(
        tuple(f"y_{index_string(t, d)}" for t in types),
        display_indices=tuple(types),
    )
    return Presentation(ring, ordered)


def inner_presentation(i: int, B: Configuration) -> Presentation:
    """The z ring of group i, variables `z{i}_{j}` in member order."""
    ring = Ring(
        tuple(f"z{i}_{j}" for j in range(1, len(B) + 1)),
        display_indices=tuple((i, j) for j in range(1, len(B) + 1)),
    )
    return Presentation(ring, B)


def _resolve_order(spec: OrderSpec, ring: Ring) -> MonomialOrder:
    if spec is None:
        return MonomialOrder(OrderKind.LEX, ring)
    if isinstance(spec, MonomialOrder):
        if spec.ring != ring:
            raise RingMismatchError("Supplied order is over a different ring")
        return spec
    return parse_order(spec.value if isinstance(spec, OrderKind) else spec, ring)


def _resolve_basis(
    presentation: Presentation, order: OrderSpec, basis: MarkedBasis | None
) -> MarkedBasis:
    if basis is not None:
        if basis.ring != presentation.source:
            raise RingMismatchError(
                f"Supplied basis ring {basis.ring.variables} does not match {presentation.source.variables}"
            )
        return basis
    return toric_basis(
        presentation.configuration,
        _resolve_order(order, presentation.source),
        presentation=presentation,
    )


@dataclass(frozen=True, slots=True)
class NestedSystem:
    """A base configuration, its inner configurations and their nesting."""

    base: Configuration
    inner: tuple[Configuration, ...]
    base_basis: MarkedBasis
    inner_bases: tuple[MarkedBasis, ...]
    result: Configuration
    expressions: tuple[StandardExpression, ...]
    presentation: Presentation
    base_presentation: Presentation
    inner_presentations: tuple[Presentation, ...]
    phi_maps: PhiMaps
    _member_positions: dict[Exponents, int] = field(init=False, repr=False, compare=False, hash=False)
    _offsets: tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "_member_positions", {m.exponents: k for k, m in enumerate(self.result.members)}
        )
        offsets = [0]
        for B in self.inner:
            offsets.append(offsets[-1] + len(B.ring))
        object.__setattr__(self, "_offsets", tuple(offsets))

    @property
    def d(self) -> int:
        return len(self.inner)

    @property
    def x_ring(self) -> Ring:
        return self.presentation.source

    @property
    def union_ring(self) -> Ring:
        return self.result.ring

    def member_position(self, exponents: Exponents) -> int | None:
        return self._member_positions.get(exponents)

    def member_type(self, k: int) -> tuple[int, ...]:
        return self.expressions[k].type_indices

    def group_slice(self, i: int) -> slice:
        """Positions of group i (1-based) inside the union ring."""
        return slice(self._offsets[i - 1], self._offsets[i])

    def compose(self, factors: Sequence[tuple[int, int]]) -> Exponents:
        """Union-ring exponents of a product of inner members."""
        out = [0] * len(self.union_ring)
        for i, j in factors:
            start = self._offsets[i - 1]
            for k, e in enumerate(self.inner[i - 1].members[j - 1].exponents):
                out[start + k] += e
        return tuple(out)


def _check_disjoint(inner: Sequence[Configuration]) -> None:
    for (a, Ba), (b, Bb) in combinations(enumerate(inner, start=1), 2):
        shared = set(Ba.ring.variables) & set(Bb.ring.variables)
        if shared:
            raise SharedVariableError(
                f"Inner configurations {a} and {b} share variables {sorted(shared)}",
                context={"groups": (a, b), "shared": sorted(shared)},
            )


def _graded(C: Configuration) -> Configuration:
    return C if C.weight is not None else check_configuration(C.members, C.ring)


def build_nested(
    A: Configuration,
    inner: Sequence[Configuration],
    *,
    base_order: OrderSpec = None,
    inner_orders: Sequence[OrderSpec] | None = None,
    base_basis: MarkedBasis | None = None,
    inner_bases: Sequence[MarkedBasis | None] | None = None,
) -> NestedSystem:
    """
    Construct A(B_1, ..., B_d) with standard expressions and sorted members.

    Bases not supplied are computed as reduced Gröbner bases of the toric
    ideals, under lex by default. Members are ordered by the lex order on
    their types (t_1 > ... > t_d) descending, ties broken by their union-ring
    exponent vectors descending.

    Raises:
        SharedVariableError: if two inner rings share a variable
        NotAConfigurationError: if A or some B_i is not a configuration
    """
    d = len(A.ring)
    if len(inner) != d:
        raise PreconditionError(f"Base ring has {d} variables but {len(inner)} inner configurations")
    _check_disjoint(inner)
    A = _graded(A)
    inner = tuple(_graded(B) for B in inner)
    inner_orders = list(inner_orders) if inner_orders is not None else [None] * d
    supplied = list(inner_bases) if inner_bases is not None else [None] * d

    base_pres = base_presentation(A)
    G0 = _resolve_basis(base_pres, base_order, base_basis)
    inner_pres = tuple(inner_presentation(i, B) for i, B in enumerate(inner, start=1))
    Gs = tuple(
        _resolve_basis(P, o, g) for P, o, g in zip(inner_pres, inner_orders, supplied, strict=True)
    )
    logger.debug(f"Base basis {len(G0)} elements, inner bases {[len(G) for G in Gs]}")

    union = Ring(tuple(v for B in inner for v in B.ring.variables))
    offsets = [0]
    for B in inner:
        offsets.append(offsets[-1] + len(B.ring))
    rules = [basis_rules(G) for G in Gs]

    def standard_choices(i: int, count: int) -> list[tuple[int, ...]]:
        lam = len(inner[i])
        choices = []
        for combo in combinations_with_replacement(range(lam), count):
            z = [0] * lam
            for j in combo:
                z[j] += 1
            z_exps = tuple(z)
            if not any(lead_divides(r, z_exps) for r in rules[i]):
                choices.append(combo)
        return choices

    found: dict[Exponents, tuple[Exponents, StandardExpression]] = {}
    for t in base_pres.configuration.members:
        per_group = [standard_choices(i, e) if e else [()] for i, e in enumerate(t.exponents)]
        for choice in product(*per_group):
            factors = tuple((i + 1, j + 1) for i, combo in enumerate(choice) for j in combo)
            u = [0] * len(union)
            for i, j in factors:
                for k, e in enumerate(inner[i - 1].members[j - 1].exponents):
                    u[offsets[i - 1] + k] += e
            u_exps = tuple(u)
            if u_exps in found:
                raise AssertionError(f"Two standard expressions give the same member {u_exps}")
            found[u_exps] = (t.exponents, StandardExpression(factors))

    ordered = sorted(found.items(), key=lambda item: (item[1][0], item[0]), reverse=True)
    members = tuple(union.monomial(u) for u, _ in ordered)
    expressions = tuple(expr for _, (_, expr) in ordered)

    assert A.weight is not None
    weight = tuple(A.weight[i] * w for i, B in enumerate(inner) for w in B.weight or ())
    result = Configuration(union, members, weight)
    presentation = result.presentation()

    type_positions = {tuple(m.exponents): k for k, m in enumerate(base_pres.configuration.members)}
    base_images = []
    group_images: list[list[Exponents]] = [[] for _ in range(d)]
    for expr in expressions:
        t = [0] * d
        for i in expr.type_indices:
            t[i - 1] += 1
        base_images.append(type_positions[tuple(t)])
        for i in range(1, d + 1):
            z = [0] * len(inner[i - 1])
            for j in expr.group(i):
                z[j - 1] += 1
            group_images[i - 1].append(tuple(z))
    phi_maps = PhiMaps(
        x_ring=presentation.source,
        y_ring=base_pres.source,
        z_rings=tuple(P.source for P in inner_pres),
        base_images=tuple(base_images),
        group_images=tuple(tuple(g) for g in group_images),
    )

    logger.info(f"Nested configuration with {len(members)} members from {len(A)} types and {d} groups")
    return NestedSystem(
        base=base_pres.configuration,
        inner=inner,
        base_basis=G0,
        inner_bases=Gs,
        result=result,
        expressions=expressions,
        presentation=presentation,
        base_presentation=base_pres,
        inner_presentations=inner_pres,
        phi_maps=phi_maps,
    )


def _factor_search(
    target: Exponents, members: Sequence[Monomial], degree: int
) -> list[int] | None:
    """Indices (weakly increasing) of `degree` members multiplying to `target`."""

    def search(remaining: Exponents, start: int, left: int) -> list[int] | None:
        if left == 0:
            return [] if not any(remaining) else None
        for k in range(start, len(members)):
            m = members[k].exponents
            if all(r >= e for r, e in zip(remaining, m, strict=True)):
                rest = search(tuple(r - e for r, e in zip(remaining, m, strict=True)), k, left - 1)
                if rest is not None:
                    return [k, *rest]
        return None

    return search(target, 0, degree)


def standard_expression(M: Monomial, system: NestedSystem) -> StandardExpression:
    """
    The standard expression of a product of inner members.

    Any factorization is found group by group, then every group's z-monomial
    is replaced by its normal form modulo that group's basis.

    Raises:
        NoFactorizationError: if M is not a product of inner members of a type in A
    """
    if M.ring != system.union_ring:
        raise RingMismatchError("Monomial is not in the union ring of the nested system")
    known = system.member_position(M.exponents)
    if known is not None:
        return system.expressions[known]

    max_steps = get_settings().groebner.max_reduction_steps
    factors: list[tuple[int, int]] = []
    type_counts = [0] * system.d
    for i, (B, G) in enumerate(zip(system.inner, system.inner_bases, strict=True), start=1):
        part = M.exponents[system.group_slice(i)]
        if not any(part):
            continue
        assert B.weight is not None
        degree = sum((w * e for w, e in zip(B.weight, part, strict=True)), Fraction(0))
        if degree.denominator != 1:
            raise NoFactorizationError(f"Group {i} part of {M} has fractional degree {degree}")
        choice = _factor_search(part, B.members, int(degree))
        if choice is None:
            raise NoFactorizationError(f"Group {i} part of {M} is not a product of members of B_{i}")
        z = [0] * len(B)
        for k in choice:
            z[k] += 1
        z_nf = reduce_exponents(tuple(z), basis_rules(G), max_steps=max_steps)
        factors.extend((i, j + 1) for j, e in enumerate(z_nf) for _ in range(e))
        type_counts[i - 1] = int(degree)

    if tuple(type_counts) not in {m.exponents for m in system.base.members}:
        raise NoFactorizationError(f"Type {type_counts} of {M} is not a member of A")
    return StandardExpression(tuple(factors))
