"""Tests for the group maps and the group-wise membership test."""

import numpy as np
import pytest

from toricnest.exceptions import RingMismatchError
from toricnest.groebner.binomials import Binomial
from toricnest.nested.maps import keylemma_test, phi


def random_binomials(system, count, seed):
    rng = np.random.default_rng(seed)
    x = system.x_ring
    for _ in range(count):
        left = [0] * len(x)
        right = [0] * len(x)
        for k in rng.integers(len(x), size=2):
            left[k] += 1
        for k in rng.integers(len(x), size=2):
            right[k] += 1
        yield Binomial(x.monomial(left), x.monomial(right))


class TestPhi:
    """Test cases for phi."""

    def test_images(self, coupon_system):
        """Test the images of x_(a1^2 a2^2) in the y ring and both z rings."""
        x = coupon_system.x_ring
        m = x.gen(x.index("x_a1.a1.a2.a2"))
        assert phi(0, m, coupon_system).exponents == (1, 0, 0)
        assert str(phi(1, m, coupon_system)) == "z1_2^2"
        assert phi(2, m, coupon_system).is_unit()

    def test_out_of_range_group(self, coupon_system):
        """Test group indices past d are rejected."""
        with pytest.raises(ValueError):
            phi(3, coupon_system.x_ring.unit(), coupon_system)

    def test_wrong_ring(self, coupon_system):
        """Test monomials outside the x ring are rejected."""
        with pytest.raises(RingMismatchError):
            phi(0, coupon_system.union_ring.gen(0), coupon_system)


class TestKeyLemma:
    """Test cases for keylemma_test."""

    def test_random_binomials(self, coupon_system):
        """Test group-wise membership matches direct membership on random binomials."""
        P = coupon_system.presentation
        members = 0
        for f in random_binomials(coupon_system, 1000, seed=7):
            result = keylemma_test(f, coupon_system)
            assert result.member == (P.evaluate(f.left) == P.evaluate(f.right))
            if result.member:
                members += 1
                assert result.base_reduces_to_zero
            else:
                assert result.base_reduces_to_zero is None
        assert members > 0

    def test_known_member(self, coupon_system):
        """Test x_(a1^2 a2^2) x_(b1^2 b2^2) - x_(a1 a2 b1 b2)^2 is a member."""
        x = coupon_system.x_ring
        left = x.gen(x.index("x_a1.a1.a2.a2")) * x.gen(x.index("x_b1.b1.b2.b2"))
        right = x.gen(x.index("x_a1.a2.b1.b2")) * x.gen(x.index("x_a1.a2.b1.b2"))
        result = keylemma_test(Binomial(left, right), coupon_system)
        assert result.member
        assert result.group_members == (True, True)

    def test_exam_system(self, exam_system):
        """Test the exam system on random binomials."""
        P = exam_system.presentation
        for f in random_binomials(exam_system, 1000, seed=3):
            result = keylemma_test(f, exam_system)
            assert result.member == (P.evaluate(f.left) == P.evaluate(f.right))

    def test_line_system(self, line_system):
        """Test the single-group line system on random binomials."""
        P = line_system.presentation
        members = 0
        for f in random_binomials(line_system, 1000, seed=11):
            result = keylemma_test(f, line_system)
            assert result.member == (P.evaluate(f.left) == P.evaluate(f.right))
            members += result.member
        assert members > 0
