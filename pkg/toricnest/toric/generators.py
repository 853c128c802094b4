"""
Generators of toric ideals.

`toric_generators` is the exact oracle: lattice basis, then saturation by
every presentation variable. `kernel_enumerate` is a brute-force second
oracle bounded by degree.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations_with_replacement
import math

from loguru import logger

from toricnest.algebra.orders import MonomialOrder
from toricnest.algebra.ring import Exponents
from toricnest.config import get_settings
from toricnest.exceptions import CombinatorialLimitError, PreconditionError
from toricnest.groebner.binomials import MarkedBasis, MarkedBinomial
from toricnest.groebner.buchberger import Pair, buchberger, reduced_groebner_pairs
from toricnest.models.types import OrderKind
from toricnest.toric.configuration import Configuration, Presentation
from toricnest.toric.lattice import integer_kernel


def _split(v: tuple[int, ...]) -> Pair:
    return tuple(max(x, 0) for x in v), tuple(max(-x, 0) for x in v)


def _divide_common(pair: Pair) -> Pair:
    lead, tail = pair
    common = tuple(map(min, lead, tail))
    if not any(common):
        return pair
    return (
        tuple(a - c for a, c in zip(lead, common, strict=True)),
        tuple(b - c for b, c in zip(tail, common, strict=True)),
    )


def toric_generators(
    C: Configuration,
    *,
    presentation: Presentation | None = None,
) -> list[MarkedBinomial]:
    """
    A generating set of the toric ideal of `C`, returned as its reduced
    Gröbner basis under grevlex on the presentation ring.

    Starting from a Z-basis of the kernel lattice, the ideal is saturated by
    each variable in turn: a Gröbner basis under grevlex with that variable
    last lets every element be divided by the monomial its two sides share.
    Dividing by any common monomial stays inside the toric ideal, which is
    prime and contains no monomials.
    """
    if not C.members:
        raise PreconditionError("Toric ideal of an empty configuration")
    if C.weight is None:
        raise PreconditionError("Configuration has no weight certificate; use check_configuration")
    presentation = presentation or C.presentation()
    ring = presentation.source
    groebner_settings = get_settings().groebner

    matrix = [list(m.exponents) for m in C.members]
    lattice = integer_kernel(matrix)
    logger.debug(f"Kernel lattice of {len(C)} members has rank {len(lattice)}")
    if not lattice:
        return []

    grevlex = MonomialOrder(OrderKind.GREVLEX, ring)
    current: list[Pair] = [_divide_common(_split(v)) for v in lattice]
    for k in range(len(ring)):
        key = grevlex.with_last(k).key
        basis = reduced_groebner_pairs(
            current,
            key,
            max_steps=groebner_settings.max_reduction_steps,
            max_size=groebner_settings.max_basis_size,
        )
        current = list(dict.fromkeys(_divide_common(p) for p in basis))
        logger.debug(f"Saturated by {ring.variables[k]}: {len(current)} binomials")

    final = buchberger(
        [MarkedBinomial(ring.monomial(a), ring.monomial(b)) for a, b in current], grevlex
    )
    top = max((g.degree for g in final), default=0)
    logger.info(f"Toric ideal of {len(C)} members: {len(final)} generators up to degree {top}")
    return list(final.elements)


def toric_basis(
    C: Configuration,
    order: MonomialOrder,
    *,
    presentation: Presentation | None = None,
) -> MarkedBasis:
    """Reduced Gröbner basis of the toric ideal of `C` under `order`."""
    return buchberger(toric_generators(C, presentation=presentation), order)


def kernel_enumerate(
    C: Configuration,
    degree_bound: int,
    *,
    presentation: Presentation | None = None,
    enumeration_cap: int | None = None,
) -> list[MarkedBinomial]:
    """
    All binomials needed to generate the toric ideal up to `degree_bound`.

    Monomials of each degree are bucketed by image. Within a bucket every
    monomial is joined to the grevlex-largest one; binomials whose sides
    share a variable are dropped since they are multiples of lower-degree
    ones.

    Raises:
        CombinatorialLimitError: if more than `enumeration_cap` monomials would be listed
    """
    if degree_bound < 1:
        raise PreconditionError(f"Degree bound must be positive, got {degree_bound}")
    presentation = presentation or C.presentation()
    ring = presentation.source
    n = len(ring)
    cap = enumeration_cap or get_settings().toric.enumeration_cap
    total = sum(math.comb(n + k - 1, k) for k in range(1, degree_bound + 1))
    if total > cap:
        raise CombinatorialLimitError(
            f"Degree {degree_bound} enumeration needs {total} monomials (cap {cap})",
            context={"variables": n, "degree_bound": degree_bound},
        )

    key = MonomialOrder(OrderKind.GREVLEX, ring).key
    result: list[MarkedBinomial] = []
    for degree in range(1, degree_bound + 1):
        buckets: dict[Exponents, list[Exponents]] = defaultdict(list)
        for combo in combinations_with_replacement(range(n), degree):
            e = [0] * n
            for k in combo:
                e[k] += 1
            buckets[presentation.image_exponents(e)].append(tuple(e))
        for monomials in buckets.values():
            if len(monomials) < 2:
                continue
            representative = max(monomials, key=key)
            for other in sorted(monomials, key=key, reverse=True):
                if other == representative:
                    continue
                if any(a and b for a, b in zip(representative, other, strict=True)):
                    continue
                result.append(MarkedBinomial(ring.monomial(representative), ring.monomial(other)))
    logger.debug(f"Kernel enumeration to degree {degree_bound}: {len(result)} binomials")
    return result
