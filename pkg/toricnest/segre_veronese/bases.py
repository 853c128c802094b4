"""
Sorting Gröbner bases of Segre-Veronese configurations and the quadratic
basis of nested configurations whose base is of Segre-Veronese type.
"""

from __future__ import annotations

from itertools import chain

from loguru import logger

from toricnest.config import get_settings
from toricnest.exceptions import PreconditionError, SortClosureError, VerificationFailure
from toricnest.groebner.binomials import MarkedBasis, MarkedBinomial
from toricnest.groebner.reduction import basis_rules
from toricnest.groebner.verification import is_reduced, is_squarefree_initial
from toricnest.models.types import Provenance
from toricnest.nested.bases import collect, lookup, reduced_groups, require_quadratic
from toricnest.nested.system import NestedSystem, type_of
from toricnest.segre_veronese.configuration import (
    SegreVeroneseSpec,
    SortedIndexString,
    infer_segre_veronese_spec,
    sort_string,
    sv_configuration,
    sv_presentation,
)
from toricnest.toric.configuration import Configuration, Presentation


def sorted_rewrite(
    left: SortedIndexString, right: SortedIndexString
) -> tuple[SortedIndexString, SortedIndexString]:
    """Interleave two index strings, sort, and split into odd and even positions."""
    n = sort_string(tuple(chain.from_iterable(zip(left, right, strict=True))))
    return n[0::2], n[1::2]


def sorting_gb(C: Configuration, *, presentation: Presentation | None = None) -> MarkedBasis:
    """
    The sorting basis: for every pair of members whose sorted rewrite differs
    from the pair itself, the binomial with the pair as lead and the rewrite
    as tail.

    Raises:
        SortClosureError: if a rewrite is not a pair of members
        VerificationFailure: if the result is not reduced
    """
    presentation = presentation or sv_presentation(C)
    x = presentation.source
    strings = [type_of(m.exponents) for m in C.members]
    if len({len(s) for s in strings}) != 1:
        raise PreconditionError("Sorting basis needs members of a single degree")
    positions = {s: k for k, s in enumerate(strings)}

    elements: list[MarkedBinomial] = []
    for a in range(len(strings)):
        for b in range(a, len(strings)):
            gamma, delta = sorted_rewrite(strings[a], strings[b])
            if gamma not in positions or delta not in positions:
                raise SortClosureError(
                    f"Sorted rewrite {gamma}, {delta} of {strings[a]}, {strings[b]} leaves the configuration"
                )
            c, d = sorted((positions[gamma], positions[delta]))
            if (c, d) == (a, b):
                continue
            lead = [0] * len(strings)
            lead[a] += 1
            lead[b] += 1
            tail = [0] * len(strings)
            tail[c] += 1
            tail[d] += 1
            elements.append(MarkedBinomial(x.monomial(lead), x.monomial(tail)))

    basis = MarkedBasis(x, tuple(elements), Provenance.MARKED_ONLY)
    if not is_reduced(basis):
        raise VerificationFailure("Sorting basis is not reduced")
    logger.info(f"Sorting basis of {len(C)} members: {len(basis)} binomials")
    return basis


def resolve_spec(system: NestedSystem, spec: SegreVeroneseSpec | None) -> SegreVeroneseSpec:
    """
    Raises:
        PreconditionError: if the base configuration is not of Segre-Veronese type
    """
    A = system.base
    if spec is None:
        spec = infer_segre_veronese_spec(A)
        if spec is None:
            raise PreconditionError("Base configuration is not of Segre-Veronese type")
        return spec
    generated = {m.exponents for m in sv_configuration(spec, A.ring).members}
    if generated != {m.exponents for m in A.members}:
        raise PreconditionError("Base configuration does not match the Segre-Veronese spec")
    return spec


def main2_basis(system: NestedSystem, spec: SegreVeroneseSpec | None = None) -> MarkedBasis:
    """
    The quadratic Gröbner basis of a nested configuration over a base of
    Segre-Veronese type.

    For each pair of members the combined upper-index string is sorted and
    split into odd and even positions to fix the two types. Each group image
    is reduced modulo its inner basis and its lower indices fill that group's
    block of the sorted string in increasing order, so the odd positions of a
    block take the first, third, ... smallest indices.

    Raises:
        PreconditionError: if the base is not of Segre-Veronese type or an inner basis is not quadratic
        VerificationFailure: if every inner initial ideal is squarefree but the result's is not
    """
    resolve_spec(system, spec)
    require_quadratic(system, include_base=False)
    max_steps = get_settings().groebner.max_reduction_steps
    inner_rules = [basis_rules(G) for G in system.inner_bases]
    types = {m.exponents for m in system.base.members}

    def rewrite(a: int, b: int) -> tuple[int, int]:
        k = sort_string(system.member_type(a) + system.member_type(b))
        groups = reduced_groups(system, a, b, inner_rules, max_steps)
        ell = list(chain.from_iterable(groups))
        # groups come out in increasing group order, matching the sorted k
        labelled = list(zip(k, ell, strict=True))
        first, second = labelled[0::2], labelled[1::2]
        for side in (first, second):
            counts = [0] * system.d
            for i, _ in side:
                counts[i - 1] += 1
            if tuple(counts) not in types:
                raise SortClosureError(f"Sorted type {[i for i, _ in side]} is not a member of the base")
        c, d = lookup(system, first), lookup(system, second)
        return (c, d) if c <= d else (d, c)

    elements = collect(system, rewrite)
    basis = MarkedBasis(system.x_ring, tuple(elements), Provenance.MARKED_ONLY)
    if all(is_squarefree_initial(G) for G in system.inner_bases) and not is_squarefree_initial(basis):
        raise VerificationFailure("Inner initial ideals are squarefree but the nested one is not")
    logger.info(f"Sorted nested basis: {len(elements)} binomials over {len(system.result)} members")
    return basis
