"""
Normal forms of monomials and binomials modulo marked bases.

Reducing a monomial by pure-difference binomials always yields a monomial,
so the rewriting below works directly on exponent tuples.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from typing import TypeAlias

from toricnest.algebra.orders import MonomialOrder
from toricnest.algebra.ring import Exponents, Monomial
from toricnest.config import get_settings
from toricnest.exceptions import ReductionBoundExceeded, RingMismatchError
from toricnest.groebner.binomials import BinomialLike, MarkedBasis, MarkedBinomial, orient, sides

# (lead, tail, positions where lead is nonzero)
Rule: TypeAlias = tuple[Exponents, Exponents, tuple[int, ...]]
Chooser: TypeAlias = Callable[[int], int]


def make_rule(lead: Exponents, tail: Exponents) -> Rule:
    return lead, tail, tuple(k for k, e in enumerate(lead) if e)


def make_rules(pairs: Iterable[tuple[Exponents, Exponents]]) -> list[Rule]:
    return [make_rule(lead, tail) for lead, tail in pairs]


def basis_rules(G: MarkedBasis) -> list[Rule]:
    return make_rules((g.lead.exponents, g.tail.exponents) for g in G.elements)


def lead_divides(rule: Rule, e: Exponents) -> bool:
    lead, _, support = rule
    return all(e[k] >= lead[k] for k in support)


def reduce_exponents(
    e: Exponents,
    rules: Sequence[Rule],
    *,
    max_steps: int,
    choose: Chooser | None = None,
) -> Exponents:
    """
    Rewrite `e` until no rule lead divides it.

    By default the first applicable rule in list order is used. `choose`
    receives the number of applicable rules and returns the index to apply,
    which lets callers compare rewriting strategies.

    Raises:
        ReductionBoundExceeded: after `max_steps` rewrites
    """
    steps = 0
    while True:
        if choose is None:
            rule = next((r for r in rules if lead_divides(r, e)), None)
        else:
            applicable = [r for r in rules if lead_divides(r, e)]
            rule = applicable[choose(len(applicable))] if applicable else None
        if rule is None:
            return e
        steps += 1
        if steps > max_steps:
            raise ReductionBoundExceeded(
                f"Normal form did not terminate within {max_steps} rewrites",
                context={"monomial": e},
            )
        lead, tail, _ = rule
        e = tuple(x - a + b for x, a, b in zip(e, lead, tail, strict=True))


def normal_form(
    m: Monomial,
    G: MarkedBasis,
    *,
    max_steps: int | None = None,
    choose: Chooser | None = None,
) -> Monomial:
    """
    The monomial reached by rewriting `m` with the rules of `G`.

    Termination is only guaranteed for coherent markings; the step bound turns
    a cycling rewrite into ReductionBoundExceeded.
    """
    if m.ring != G.ring:
        raise RingMismatchError("Monomial is not in the basis ring")
    bound = max_steps or get_settings().groebner.max_reduction_steps
    return m.ring.monomial(reduce_exponents(m.exponents, basis_rules(G), max_steps=bound, choose=choose))


def normal_form_binomial(
    f: BinomialLike,
    G: MarkedBasis,
    order: MonomialOrder | None = None,
    *,
    max_steps: int | None = None,
) -> MarkedBinomial | None:
    """
    Reduce both sides of `f`; None when they meet, otherwise the binomial of
    the two normal forms marked by `order` (the basis order by default).
    """
    order = order or G.order
    if order is None:
        raise ValueError("normal_form_binomial needs an order for a marked-only basis")
    left, right = sides(f)
    rules = basis_rules(G)
    bound = max_steps or get_settings().groebner.max_reduction_steps
    a = reduce_exponents(left.exponents, rules, max_steps=bound)
    b = reduce_exponents(right.exponents, rules, max_steps=bound)
    return orient(left.ring.monomial(a), left.ring.monomial(b), order)


def reduces_to_zero(f: BinomialLike, G: MarkedBasis, *, max_steps: int | None = None) -> bool:
    """True when both sides of `f` share a normal form modulo `G`."""
    left, right = sides(f)
    if left.ring != G.ring:
        raise RingMismatchError("Binomial is not in the basis ring")
    rules = basis_rules(G)
    bound = max_steps or get_settings().groebner.max_reduction_steps
    return reduce_exponents(left.exponents, rules, max_steps=bound) == reduce_exponents(
        right.exponents, rules, max_steps=bound
    )


def is_standard(m: Monomial, G: MarkedBasis) -> bool:
    """True when no lead of `G` divides `m`."""
    if m.ring != G.ring:
        raise RingMismatchError("Monomial is not in the basis ring")
    return not any(lead_divides(r, m.exponents) for r in basis_rules(G))
