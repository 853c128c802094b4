"""
The quadratic Gröbner basis of a nested configuration built from quadratic
Gröbner bases of the base and inner configurations.
"""

from __future__ import annotations

from collections.abc import Callable

from loguru import logger

from toricnest.algebra.ring import Exponents
from toricnest.config import get_settings
from toricnest.exceptions import PreconditionError, VerificationFailure
from toricnest.groebner.binomials import MarkedBasis, MarkedBinomial
from toricnest.groebner.reduction import Rule, basis_rules, reduce_exponents
from toricnest.groebner.verification import max_degree
from toricnest.models.types import Provenance
from toricnest.nested.system import NestedSystem

# (a, b) with a <= b  ->  (c, d) with c <= d
PairRewrite = Callable[[int, int], tuple[int, int]]


def require_quadratic(system: NestedSystem, *, include_base: bool = True) -> None:
    """
    Raises:
        PreconditionError: if a required basis has an element of degree above two
    """
    bases = [("base", system.base_basis)] if include_base else []
    bases += [(f"inner {i}", G) for i, G in enumerate(system.inner_bases, start=1)]
    for name, G in bases:
        top = max_degree(G)
        if top > 2:
            raise PreconditionError(
                f"The {name} Gröbner basis is not quadratic (degree {top})",
                context={"basis": name, "degree": top},
            )


def _pair_image(system: NestedSystem, j: int, a: int, b: int) -> Exponents:
    images = system.phi_maps.group_images[j - 1]
    return tuple(x + y for x, y in zip(images[a], images[b], strict=True))


def sorted_indices(z: Exponents) -> list[int]:
    """1-based lower indices of a z-monomial, weakly increasing."""
    return [j + 1 for j, e in enumerate(z) for _ in range(e)]


def reduced_groups(
    system: NestedSystem, a: int, b: int, rules: list[list[Rule]], max_steps: int
) -> list[list[int]]:
    """Per group, the normal form of the group image of x_a x_b as sorted indices."""
    return [
        sorted_indices(reduce_exponents(_pair_image(system, j, a, b), rules[j - 1], max_steps=max_steps))
        for j in range(1, system.d + 1)
    ]


def lookup(system: NestedSystem, factors: list[tuple[int, int]]) -> int:
    k = system.member_position(system.compose(factors))
    if k is None:
        raise VerificationFailure(
            f"Rewritten product {factors} is not a member of the nested configuration"
        )
    return k


def collect(system: NestedSystem, rewrite: PairRewrite) -> list[MarkedBinomial]:
    """Apply `rewrite` to every unordered pair and keep the pairs it moves."""
    x = system.x_ring
    elements: list[MarkedBinomial] = []
    eta = len(system.result)
    for a in range(eta):
        for b in range(a, eta):
            c, d = rewrite(a, b)
            if (c, d) == (a, b):
                continue
            lead = [0] * eta
            lead[a] += 1
            lead[b] += 1
            tail = [0] * eta
            tail[c] += 1
            tail[d] += 1
            elements.append(MarkedBinomial(x.monomial(lead), x.monomial(tail)))
    return elements


def main1_basis(system: NestedSystem) -> MarkedBasis:
    """
    The quadratic reduced Gröbner basis of the nested toric ideal.

    For each pair of members, the base image is reduced modulo the base basis
    to fix the two types, and each group image modulo its inner basis to fix
    the inner factors. The type that comes first in the member ordering takes
    the smallest lower indices of every group. The pair is emitted, marked
    with itself as lead, when the rewrite changes it.

    Raises:
        PreconditionError: if some input basis is not quadratic
    """
    require_quadratic(system)
    max_steps = get_settings().groebner.max_reduction_steps
    maps = system.phi_maps
    base_rules = basis_rules(system.base_basis)
    inner_rules = [basis_rules(G) for G in system.inner_bases]
    y_types = [m.exponents for m in system.base.members]

    def rewrite(a: int, b: int) -> tuple[int, int]:
        y = [0] * len(maps.y_ring)
        y[maps.base_images[a]] += 1
        y[maps.base_images[b]] += 1
        y_nf = reduce_exponents(tuple(y), base_rules, max_steps=max_steps)
        g, h = (k for k, e in enumerate(y_nf) for _ in range(e))
        # y ring follows the lex-descending member order, so g is the larger type
        first_type = y_types[min(g, h)]
        groups = reduced_groups(system, a, b, inner_rules, max_steps)

        first: list[tuple[int, int]] = []
        second: list[tuple[int, int]] = []
        for j, indices in enumerate(groups, start=1):
            take = first_type[j - 1]
            first += [(j, ell) for ell in indices[:take]]
            second += [(j, ell) for ell in indices[take:]]
        c, d = lookup(system, first), lookup(system, second)
        return (c, d) if c <= d else (d, c)

    elements = collect(system, rewrite)
    logger.info(f"Quadratic nested basis: {len(elements)} binomials over {len(system.result)} members")
    return MarkedBasis(system.x_ring, tuple(elements), Provenance.MARKED_ONLY)
