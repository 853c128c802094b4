"""
Checks on marked bases: marking coherence, the Gröbner property against an
ideal, and initial ideal utilities.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
import math

from loguru import logger

from toricnest.algebra.feasibility import LinearConstraint, find_feasible_point
from toricnest.algebra.orders import MonomialOrder, weighted
from toricnest.algebra.ring import Monomial
from toricnest.exceptions import IncoherentMarkingError
from toricnest.groebner.binomials import BinomialLike, MarkedBasis, sides
from toricnest.groebner.buchberger import buchberger, minimalize, s_pair
from toricnest.groebner.reduction import basis_rules, lead_divides, reduces_to_zero
from toricnest.models.types import OrderKind, Relation

Evaluation = Callable[[Monomial], Monomial]


@dataclass(frozen=True, slots=True)
class WeightCertificate:
    """Nonnegative weights with weights . lead > weights . tail for every element."""

    weights: tuple[Fraction, ...]

    def separates(self, G: MarkedBasis) -> bool:
        return all(_dot(self.weights, g.difference()) > 0 for g in G.elements)

    def as_order(self, G: MarkedBasis, tie_break: OrderKind = OrderKind.GREVLEX) -> MonomialOrder:
        """A monomial order under which every marking of `G` holds."""
        return weighted(G.ring, self.weights, tie_break)

    def as_text(self) -> list[str]:
        return [str(w) for w in self.weights]


def _dot(w: Sequence[Fraction], v: Sequence[int]) -> Fraction:
    return sum((a * b for a, b in zip(w, v, strict=True)), Fraction(0))


def verify_marking(G: MarkedBasis) -> WeightCertificate | None:
    """
    Search for nonnegative rational weights strictly separating every lead
    from its tail. Returns None when no such vector exists.
    """
    n = len(G.ring)
    constraints = [
        LinearConstraint(tuple(Fraction(d) for d in g.difference()), Relation.GE, Fraction(1))
        for g in G.elements
    ]
    point = find_feasible_point(constraints, n)
    if point is None:
        logger.info(f"No separating weight vector for {len(G)} marked binomials")
        return None
    # integral representative
    scale = reduce(math.lcm, (w.denominator for w in point), 1)
    certificate = WeightCertificate(tuple(w * scale for w in point))
    logger.debug(f"Marking certificate: {certificate.as_text()}")
    return certificate


def is_groebner_basis_of(
    G: MarkedBasis,
    ideal_gens: Sequence[BinomialLike],
    *,
    evaluate: Evaluation | None = None,
) -> bool:
    """
    Decide whether `G` is a Gröbner basis of the ideal generated by `ideal_gens`.

    Three conditions must hold: every element of `G` lies in the ideal (checked
    through `evaluate` when given, otherwise by reduction modulo a Buchberger
    basis of the generators), every S-pair of `G` reduces to zero modulo `G`,
    and every generator reduces to zero modulo `G`.

    Raises:
        IncoherentMarkingError: when the markings of `G` admit no weight order
    """
    return check_groebner_basis(G, ideal_gens, evaluate=evaluate).holds


@dataclass(frozen=True, slots=True)
class GroebnerCheck:
    """Individual outcomes of `is_groebner_basis_of`."""

    certificate: WeightCertificate
    members_in_ideal: bool
    s_pairs_reduce_to_zero: bool
    generators_reduce_to_zero: bool

    @property
    def holds(self) -> bool:
        return self.members_in_ideal and self.s_pairs_reduce_to_zero and self.generators_reduce_to_zero


def check_groebner_basis(
    G: MarkedBasis,
    ideal_gens: Sequence[BinomialLike],
    *,
    evaluate: Evaluation | None = None,
) -> GroebnerCheck:
    """Same as `is_groebner_basis_of`, keeping each condition's outcome."""
    certificate = verify_marking(G)
    if certificate is None:
        raise IncoherentMarkingError(
            "Marked basis admits no separating weight vector", context={"size": len(G)}
        )
    order = certificate.as_order(G)

    if evaluate is not None:
        members = all(evaluate(g.lead) == evaluate(g.tail) for g in G.elements)
    else:
        ideal_basis = buchberger(list(ideal_gens), order)
        members = all(reduces_to_zero(g, ideal_basis) for g in G.elements)

    s_pairs = True
    for f, g in combinations(G.elements, 2):
        if not any(a and b for a, b in zip(f.lead.exponents, g.lead.exponents, strict=True)):
            continue
        s = s_pair(f, g)
        if s is not None and not reduces_to_zero(s, G):
            s_pairs = False
            break

    generators = all(reduces_to_zero(f, G) for f in ideal_gens if not _is_zero(f))
    result = GroebnerCheck(certificate, members, s_pairs, generators)
    logger.debug(
        f"Gröbner check: members={members} s_pairs={s_pairs} generators={generators}"
    )
    return result


def _is_zero(f: BinomialLike) -> bool:
    left, right = sides(f)
    return left == right


def initial_ideal_generators(G: MarkedBasis) -> list[Monomial]:
    """Minimal generators of the ideal spanned by the leads of `G`."""
    if G.order is not None:
        key = G.order.key
    else:
        key = MonomialOrder(OrderKind.GREVLEX, G.ring).key
    pairs = [(g.lead.exponents, g.tail.exponents) for g in G.elements]
    return [G.ring.monomial(lead) for lead, _ in minimalize(pairs, key)]


def is_squarefree_initial(G: MarkedBasis) -> bool:
    return all(m.is_squarefree() for m in initial_ideal_generators(G))


def is_reduced(G: MarkedBasis) -> bool:
    """No lead divides another element's lead or any tail."""
    rules = basis_rules(G)
    for i, g in enumerate(G.elements):
        for j, rule in enumerate(rules):
            if i != j and lead_divides(rule, g.lead.exponents):
                return False
            if lead_divides(rule, g.tail.exponents):
                return False
    return True


def max_degree(G: MarkedBasis) -> int:
    return max((g.degree for g in G.elements), default=0)
