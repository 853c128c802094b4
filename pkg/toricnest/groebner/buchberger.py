"""
Buchberger's algorithm specialized to pure-difference binomials.

Every S-polynomial of two binomials u - v and u' - v' is again a binomial,
and so is every reduction of it, so the whole computation is carried out on
pairs of exponent tuples.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
import heapq

from loguru import logger

from toricnest.algebra.orders import MonomialOrder
from toricnest.algebra.ring import Exponents
from toricnest.config import GroebnerSettings, get_settings
from toricnest.exceptions import CombinatorialLimitError, RingMismatchError
from toricnest.groebner.binomials import Binomial, BinomialLike, MarkedBasis, MarkedBinomial, sides
from toricnest.groebner.reduction import Rule, lead_divides, make_rule, reduce_exponents
from toricnest.models.types import Provenance

Pair = tuple[Exponents, Exponents]
OrderKey = Callable[[Exponents], tuple]


def _lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(map(max, a, b))


def _coprime(a: Exponents, b: Exponents) -> bool:
    return not any(x and y for x, y in zip(a, b, strict=True))


def _spoly(f: Pair, g: Pair) -> Pair:
    lead = _lcm(f[0], g[0])
    return (
        tuple(m - a + t for m, a, t in zip(lead, f[0], f[1], strict=True)),
        tuple(m - a + t for m, a, t in zip(lead, g[0], g[1], strict=True)),
    )


def s_pair(f: MarkedBinomial, g: MarkedBinomial) -> Binomial | None:
    """
    (L / lead f) * tail f - (L / lead g) * tail g with L = lcm of the leads.

    Returns None when the two products coincide.
    """
    if f.ring != g.ring:
        raise RingMismatchError("S-pair of binomials from different rings")
    a, b = _spoly((f.lead.exponents, f.tail.exponents), (g.lead.exponents, g.tail.exponents))
    if a == b:
        return None
    return Binomial(f.ring.monomial(a), f.ring.monomial(b))


def minimalize(basis: Iterable[Pair], key: OrderKey) -> list[Pair]:
    """Keep one element per minimal lead, scanning leads in increasing order."""
    kept: list[Pair] = []
    kept_rules: list[Rule] = []
    for lead, tail in sorted(basis, key=lambda p: key(p[0])):
        if any(lead_divides(r, lead) for r in kept_rules):
            continue
        kept.append((lead, tail))
        kept_rules.append(make_rule(lead, tail))
    return kept


def interreduce(basis: Sequence[Pair], key: OrderKey, *, max_steps: int) -> list[Pair]:
    """Replace every tail of a minimal basis by its normal form; sort by lead."""
    rules = [make_rule(lead, tail) for lead, tail in basis]
    reduced = [(lead, reduce_exponents(tail, rules, max_steps=max_steps)) for lead, tail in basis]
    return sorted(reduced, key=lambda p: key(p[0]))


def reduced_groebner_pairs(
    generators: Iterable[Pair],
    key: OrderKey,
    *,
    max_steps: int,
    max_size: int,
) -> list[Pair]:
    """
    Reduced Gröbner basis of the binomial ideal spanned by `generators`.

    Pairs are processed smallest lcm first. The product criterion and the
    chain criterion skip S-pairs known to reduce to zero.

    Raises:
        CombinatorialLimitError: if the working basis exceeds `max_size`
    """
    basis: list[Pair] = []
    rules: list[Rule] = []
    pending: set[tuple[int, int]] = set()
    heap: list[tuple[tuple, int, int]] = []

    def orient_pair(a: Exponents, b: Exponents) -> Pair:
        return (a, b) if key(a) > key(b) else (b, a)

    def insert(pair: Pair) -> None:
        new = len(basis)
        basis.append(pair)
        rules.append(make_rule(*pair))
        for i in range(new):
            pending.add((i, new))
            heapq.heappush(heap, (key(_lcm(basis[i][0], pair[0])), i, new))
        if len(basis) > max_size:
            raise CombinatorialLimitError(
                f"Gröbner basis computation exceeded {max_size} elements",
                context={"pending_pairs": len(pending)},
            )

    for left, right in generators:
        a = reduce_exponents(left, rules, max_steps=max_steps)
        b = reduce_exponents(right, rules, max_steps=max_steps)
        if a != b:
            insert(orient_pair(a, b))

    processed = 0
    skipped = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        lead_i, lead_j = basis[i][0], basis[j][0]
        if _coprime(lead_i, lead_j):
            skipped += 1
            continue
        lcm = _lcm(lead_i, lead_j)
        if any(
            k not in (i, j)
            and lead_divides(rules[k], lcm)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k in range(len(basis))
        ):
            skipped += 1
            continue
        processed += 1
        left, right = _spoly(basis[i], basis[j])
        a = reduce_exponents(left, rules, max_steps=max_steps)
        b = reduce_exponents(right, rules, max_steps=max_steps)
        if a != b:
            insert(orient_pair(a, b))

    logger.debug(
        f"Buchberger processed {processed} S-pairs, skipped {skipped}, working basis {len(basis)}"
    )
    return interreduce(minimalize(basis, key), key, max_steps=max_steps)


def buchberger(
    gens: Sequence[BinomialLike],
    order: MonomialOrder,
    *,
    groebner_settings: GroebnerSettings | None = None,
) -> MarkedBasis:
    """
    Reduced Gröbner basis of the ideal generated by `gens` under `order`.

    Elements are sorted by lead, ascending. The empty generator list gives the
    empty basis.
    """
    groebner_settings = groebner_settings or get_settings().groebner
    pairs: list[Pair] = []
    for f in gens:
        left, right = sides(f)
        if left.ring != order.ring:
            raise RingMismatchError("Generator is not in the order's ring")
        pairs.append((left.exponents, right.exponents))

    result = reduced_groebner_pairs(
        pairs,
        order.key,
        max_steps=groebner_settings.max_reduction_steps,
        max_size=groebner_settings.max_basis_size,
    )
    ring = order.ring
    elements = tuple(MarkedBinomial(ring.monomial(lead), ring.monomial(tail)) for lead, tail in result)
    logger.debug(f"Reduced Gröbner basis under {order.describe()}: {len(elements)} elements")
    return MarkedBasis(ring, elements, Provenance.CONSTRUCTED, order)
