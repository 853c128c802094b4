"""
Monomial orders.

Every order is realized as a sort key on exponent tuples: a monomial is
larger exactly when its key is larger. The Gröbner engine works with the
keys directly and never calls `compare` in its inner loops.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
import math

from toricnest.algebra.ring import Exponents, Monomial, Ring
from toricnest.exceptions import ParseError, RingMismatchError
from toricnest.models.types import Comparison, OrderKind


@dataclass(frozen=True, slots=True)
class MonomialOrder:
    """
    A monomial order on `ring`.

    `variable_priority` lists ring positions from the largest variable to the
    smallest; by default the ring order is used (first variable largest). For
    `weighted`, `weights` holds one nonnegative rational per variable and
    `tie_break` names the order that decides between equal weights.
    """

    kind: OrderKind
    ring: Ring
    weights: tuple[Fraction, ...] | None = None
    tie_break: OrderKind = OrderKind.GREVLEX
    variable_priority: tuple[int, ...] | None = None
    _key: Callable[[Exponents], tuple] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", OrderKind(self.kind))
        object.__setattr__(self, "tie_break", OrderKind(self.tie_break))
        n = len(self.ring)
        if self.variable_priority is not None:
            priority = tuple(self.variable_priority)
            if sorted(priority) != list(range(n)):
                raise ValueError(f"variable_priority must be a permutation of 0..{n - 1}")
            object.__setattr__(self, "variable_priority", priority)

        if self.kind is OrderKind.WEIGHTED:
            if self.weights is None or len(self.weights) != n:
                raise ValueError(f"Weighted order needs {n} weights")
            weights = tuple(Fraction(w) for w in self.weights)
            if any(w < 0 for w in weights):
                raise ValueError("Order weights must be nonnegative")
            if self.tie_break is OrderKind.WEIGHTED:
                raise ValueError("Tie-break order cannot itself be weighted")
            object.__setattr__(self, "weights", weights)
            tie = _plain_key(self.tie_break, self.variable_priority)
            scale = reduce(math.lcm, (w.denominator for w in weights), 1)
            ints = tuple(int(w * scale) for w in weights)

            def weighted_key(e: Exponents) -> tuple:
                return (sum(w * x for w, x in zip(ints, e, strict=True)), tie(e))

            object.__setattr__(self, "_key", weighted_key)
        else:
            if self.weights is not None:
                raise ValueError(f"{self.kind.value} order takes no weights")
            object.__setattr__(self, "_key", _plain_key(self.kind, self.variable_priority))

    def key(self, m: Monomial | Exponents) -> tuple:
        """Sort key; larger keys are larger monomials."""
        if isinstance(m, Monomial):
            if m.ring != self.ring:
                raise RingMismatchError("Monomial is not in the order's ring")
            return self._key(m.exponents)
        return self._key(m)

    def compare(self, a: Monomial, b: Monomial) -> Comparison:
        ka, kb = self.key(a), self.key(b)
        if ka > kb:
            return Comparison.GREATER
        if ka < kb:
            return Comparison.LESS
        return Comparison.EQUAL

    def describe(self) -> str:
        """Text accepted back by `parse_order`."""
        if self.kind is OrderKind.WEIGHTED:
            assert self.weights is not None
            text = "weighted:" + ",".join(str(w) for w in self.weights)
            if self.tie_break is not OrderKind.GREVLEX:
                text += f":{self.tie_break.value}"
            return text
        return self.kind.value

    def with_last(self, k: int) -> MonomialOrder:
        """The same family with variable `k` moved to the smallest position."""
        base = self.variable_priority or tuple(range(len(self.ring)))
        priority = tuple(i for i in base if i != k) + (k,)
        return MonomialOrder(
            kind=self.kind,
            ring=self.ring,
            weights=self.weights,
            tie_break=self.tie_break,
            variable_priority=priority,
        )


def _plain_key(kind: OrderKind, priority: tuple[int, ...] | None) -> Callable[[Exponents], tuple]:
    if priority is None:

        def permute(e: Exponents) -> Exponents:
            return e
    else:

        def permute(e: Exponents) -> Exponents:
            return tuple(e[i] for i in priority)

    if kind is OrderKind.LEX:
        return lambda e: permute(e)
    if kind is OrderKind.GRLEX:
        return lambda e: (sum(e), permute(e))
    if kind is OrderKind.GREVLEX:
        return lambda e: (sum(e), tuple(-x for x in reversed(permute(e))))
    raise ValueError(f"No plain key for {kind}")


def compare(order: MonomialOrder, a: Monomial, b: Monomial) -> Comparison:
    """Compare two monomials of the order's ring."""
    return order.compare(a, b)


def lex(ring: Ring) -> MonomialOrder:
    return MonomialOrder(OrderKind.LEX, ring)


def grlex(ring: Ring) -> MonomialOrder:
    return MonomialOrder(OrderKind.GRLEX, ring)


def grevlex(ring: Ring) -> MonomialOrder:
    return MonomialOrder(OrderKind.GREVLEX, ring)


def weighted(
    ring: Ring,
    weights: Sequence[Fraction | int | str],
    tie_break: OrderKind = OrderKind.GREVLEX,
) -> MonomialOrder:
    return MonomialOrder(
        OrderKind.WEIGHTED,
        ring,
        weights=tuple(Fraction(w) for w in weights),
        tie_break=tie_break,
    )


def parse_order(text: str, ring: Ring) -> MonomialOrder:
    """
    Parse `lex`, `grlex`, `grevlex` or `weighted:w1,w2,...[:tie]`.

    Weights are integers or rationals `p/q`; the optional tie-break defaults
    to grevlex.
    """
    text = text.strip()
    if text in {"lex", "grlex", "grevlex"}:
        return MonomialOrder(OrderKind(text), ring)
    if text.startswith("weighted:"):
        body = text.removeprefix("weighted:")
        weight_text, _, tie_text = body.partition(":")
        try:
            weights = [Fraction(w.strip()) for w in weight_text.split(",") if w.strip()]
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"Invalid order weights {weight_text!r}") from exc
        try:
            tie = OrderKind(tie_text) if tie_text else OrderKind.GREVLEX
        except ValueError as exc:
            raise ParseError(f"Unknown tie-break order {tie_text!r}") from exc
        if len(weights) != len(ring):
            raise ParseError(f"Order has {len(weights)} weights but the ring has {len(ring)} variables")
        try:
            return weighted(ring, weights, tie)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"Unknown order {text!r}")
