"""Binomials with implicit coefficients +1 and -1, marked and unmarked."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from toricnest.algebra.orders import MonomialOrder
from toricnest.algebra.ring import Monomial, Ring
from toricnest.exceptions import RingMismatchError
from toricnest.models.types import Provenance


@dataclass(frozen=True, slots=True)
class Binomial:
    """The pure difference `left - right`, not yet marked."""

    left: Monomial
    right: Monomial

    def __post_init__(self) -> None:
        if self.left.ring != self.right.ring:
            raise RingMismatchError("Binomial sides belong to different rings")

    @property
    def ring(self) -> Ring:
        return self.left.ring

    def is_zero(self) -> bool:
        return self.left == self.right

    def is_homogeneous(self) -> bool:
        return self.left.degree == self.right.degree

    def mark(self, order: MonomialOrder) -> MarkedBinomial | None:
        """Mark the larger side as lead; None for the zero binomial."""
        return orient(self.left, self.right, order)

    def __str__(self) -> str:
        return f"{self.left} - {self.right}"


@dataclass(frozen=True, slots=True)
class MarkedBinomial:
    """A rewrite rule `lead -> tail`."""

    lead: Monomial
    tail: Monomial

    def __post_init__(self) -> None:
        if self.lead.ring != self.tail.ring:
            raise RingMismatchError("Lead and tail belong to different rings")
        if self.lead == self.tail:
            raise ValueError(f"Lead equals tail: {self.lead}")

    @property
    def ring(self) -> Ring:
        return self.lead.ring

    @property
    def degree(self) -> int:
        return max(self.lead.degree, self.tail.degree)

    def is_homogeneous(self) -> bool:
        return self.lead.degree == self.tail.degree

    def flipped(self) -> MarkedBinomial:
        return MarkedBinomial(self.tail, self.lead)

    def as_binomial(self) -> Binomial:
        return Binomial(self.lead, self.tail)

    def difference(self) -> tuple[int, ...]:
        """Exponent vector lead - tail."""
        return tuple(a - b for a, b in zip(self.lead.exponents, self.tail.exponents, strict=True))

    def __str__(self) -> str:
        return f"{self.lead} -> {self.tail}"


BinomialLike = Binomial | MarkedBinomial


def sides(f: BinomialLike) -> tuple[Monomial, Monomial]:
    if isinstance(f, MarkedBinomial):
        return f.lead, f.tail
    return f.left, f.right


def orient(a: Monomial, b: Monomial, order: MonomialOrder) -> MarkedBinomial | None:
    """Mark the larger of `a` and `b` under `order`; None when they are equal."""
    if a == b:
        return None
    if order.key(a) > order.key(b):
        return MarkedBinomial(a, b)
    return MarkedBinomial(b, a)


@dataclass(frozen=True, slots=True)
class MarkedBasis:
    """
    A list of marked binomials over one ring.

    Constructed bases carry the order they were built for and every lead is
    larger than its tail under it. Marked-only bases make no such claim; their
    coherence is established by `verify_marking`.
    """

    ring: Ring
    elements: tuple[MarkedBinomial, ...]
    provenance: Provenance = Provenance.MARKED_ONLY
    order: MonomialOrder | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "provenance", Provenance(self.provenance))
        for g in self.elements:
            if g.ring != self.ring:
                raise RingMismatchError(f"Basis element {g} is not in the basis ring")
        if self.provenance is Provenance.CONSTRUCTED:
            if self.order is None:
                raise ValueError("A constructed basis needs its monomial order")
            if self.order.ring != self.ring:
                raise RingMismatchError("Basis order is over a different ring")
            for g in self.elements:
                if self.order.key(g.lead) <= self.order.key(g.tail):
                    raise ValueError(f"Lead of {g} is not larger than its tail under the order")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[MarkedBinomial]:
        return iter(self.elements)

    def leads(self) -> list[Monomial]:
        return [g.lead for g in self.elements]

    def as_set(self) -> frozenset[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Markings as exponent pairs, for order-independent comparison."""
        return frozenset((g.lead.exponents, g.tail.exponents) for g in self.elements)

    def same_marked_set(self, other: MarkedBasis) -> bool:
        return self.ring == other.ring and self.as_set() == other.as_set()

    def with_order(self, order: MonomialOrder) -> MarkedBasis:
        """Attach an order under which the markings are known to hold."""
        return MarkedBasis(self.ring, self.elements, Provenance.CONSTRUCTED, order)
