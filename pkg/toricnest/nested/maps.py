"""
The maps from the x ring of a nested configuration to the y ring of the base
configuration and to the z ring of each inner configuration, and the
membership test built on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from loguru import logger

from toricnest.algebra.ring import Exponents, Monomial, Ring
from toricnest.exceptions import KeyLemmaViolation, RingMismatchError
from toricnest.groebner.binomials import Binomial, BinomialLike, sides
from toricnest.groebner.reduction import reduces_to_zero

if TYPE_CHECKING:
    from toricnest.nested.system import NestedSystem


@dataclass(frozen=True, slots=True)
class PhiMaps:
    """
    Variable-level images of every x variable.

    `base_images[k]` is the y position of member k's type and
    `group_images[j - 1][k]` the exponents of its group-j factors in the
    z ring of group j, both read off the member's standard expression.
    """

    x_ring: Ring
    y_ring: Ring
    z_rings: tuple[Ring, ...]
    base_images: tuple[int, ...]
    group_images: tuple[tuple[Exponents, ...], ...]

    def image(self, j: int, e: Exponents) -> Exponents:
        """Exponents of the image of x^e under the map to group `j` (0 is the base)."""
        if j == 0:
            out = [0] * len(self.y_ring)
            for k, count in enumerate(e):
                if count:
                    out[self.base_images[k]] += count
            return tuple(out)
        if not 1 <= j <= len(self.z_rings):
            raise ValueError(f"Group index {j} outside 0..{len(self.z_rings)}")
        images = self.group_images[j - 1]
        out = [0] * len(self.z_rings[j - 1])
        for k, count in enumerate(e):
            if count:
                for i, z in enumerate(images[k]):
                    out[i] += count * z
        return tuple(out)

    def target_ring(self, j: int) -> Ring:
        return self.y_ring if j == 0 else self.z_rings[j - 1]


def phi(j: int, m: Monomial, system: NestedSystem) -> Monomial:
    """Image of an x-ring monomial in the y ring (j = 0) or the z ring of group j."""
    maps = system.phi_maps
    if m.ring != maps.x_ring:
        raise RingMismatchError("Monomial is not in the x ring of the nested system")
    image = maps.image(j, m.exponents)
    return maps.target_ring(j).monomial(image)


@dataclass(frozen=True, slots=True)
class KeyLemmaResult:
    """Membership decided directly and group by group."""

    member: bool
    group_members: tuple[bool, ...]
    base_reduces_to_zero: bool | None


def keylemma_test(f: BinomialLike, system: NestedSystem) -> KeyLemmaResult:
    """
    Decide whether `f` lies in the toric ideal of the nested configuration.

    The direct test compares images under the evaluation map. The group test
    asks whether the image of `f` in every inner z ring lies in that inner
    toric ideal, by reduction modulo the inner Gröbner basis. When members,
    the image in the y ring must reduce to zero modulo the base basis.

    Raises:
        KeyLemmaViolation: if the two tests disagree or the base image fails
    """
    left, right = sides(f)
    maps = system.phi_maps
    if left.ring != maps.x_ring:
        raise RingMismatchError("Binomial is not in the x ring of the nested system")

    direct = system.presentation.evaluate(left) == system.presentation.evaluate(right)

    group_members: list[bool] = []
    for j, (G, P) in enumerate(zip(system.inner_bases, system.inner_presentations, strict=True), start=1):
        a = maps.target_ring(j).monomial(maps.image(j, left.exponents))
        b = maps.target_ring(j).monomial(maps.image(j, right.exponents))
        same_image = P.evaluate(a) == P.evaluate(b)
        by_reduction = reduces_to_zero(Binomial(a, b), G)
        if same_image != by_reduction:
            raise KeyLemmaViolation(
                f"Group {j} basis does not decide membership of {a} - {b}",
                context={"image_equal": same_image, "reduces": by_reduction},
            )
        group_members.append(by_reduction)

    via_groups = all(group_members)
    if direct != via_groups:
        raise KeyLemmaViolation(
            f"Direct membership {direct} disagrees with group-wise membership {via_groups}",
            context={"binomial": f"{left} - {right}"},
        )

    base_zero: bool | None = None
    if direct:
        y_left = maps.y_ring.monomial(maps.image(0, left.exponents))
        y_right = maps.y_ring.monomial(maps.image(0, right.exponents))
        base_zero = reduces_to_zero(Binomial(y_left, y_right), system.base_basis)
        if not base_zero:
            raise KeyLemmaViolation(
                f"Base image {y_left} - {y_right} of a member does not reduce to zero"
            )
    logger.debug(f"Membership of {left} - {right}: {direct}")
    return KeyLemmaResult(direct, tuple(group_members), base_zero)
