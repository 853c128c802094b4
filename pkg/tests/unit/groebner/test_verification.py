"""Tests for marking certificates and Gröbner basis checks."""

import pytest

from toricnest.algebra.orders import grevlex
from toricnest.algebra.ring import Ring
from toricnest.exceptions import IncoherentMarkingError
from toricnest.groebner.binomials import Binomial, MarkedBasis, MarkedBinomial
from toricnest.groebner.verification import (
    check_groebner_basis,
    initial_ideal_generators,
    is_groebner_basis_of,
    is_reduced,
    is_squarefree_initial,
    max_degree,
    verify_marking,
)
from toricnest.segre_veronese.configuration import veronese_configuration
from toricnest.toric.generators import toric_basis, toric_generators

Y = Ring(("y11", "y12", "y22"))


def marked(ring, lead, tail):
    return MarkedBinomial(ring.monomial(lead), ring.monomial(tail))


class TestVerifyMarking:
    """Test cases for verify_marking."""

    def test_certificate_separates(self):
        """Test the certificate gives every lead a larger weight than its tail."""
        G = MarkedBasis(Y, (marked(Y, (1, 0, 1), (0, 2, 0)),))
        cert = verify_marking(G)
        assert cert is not None
        assert cert.separates(G)
        assert all(w >= 0 for w in cert.weights)
        assert all(w.denominator == 1 for w in cert.weights)

    def test_cycle_has_no_certificate(self):
        """Test u -> v together with v -> u is incoherent."""
        G = MarkedBasis(Y, (marked(Y, (1, 0, 0), (0, 1, 0)), marked(Y, (0, 1, 0), (1, 0, 0))))
        assert verify_marking(G) is None

    def test_certificate_order_agrees(self):
        """Test the derived order marks every element as given."""
        G = MarkedBasis(Y, (marked(Y, (0, 2, 0), (1, 0, 1)),))
        cert = verify_marking(G)
        order = cert.as_order(G)
        assert order.key(Y.monomial((0, 2, 0))) > order.key(Y.monomial((1, 0, 1)))


class TestGroebnerChecks:
    """Test cases for is_groebner_basis_of and check_groebner_basis."""

    def test_computed_basis_passes(self):
        """Test a computed toric basis passes every check."""
        C = veronese_configuration(3, 2)
        P = C.presentation()
        G = toric_basis(C, grevlex(P.source), presentation=P)
        gens = toric_generators(C, presentation=P)
        check = check_groebner_basis(G, gens, evaluate=P.evaluate)
        assert check.holds
        assert is_groebner_basis_of(G, gens)

    def test_incoherent_marking_raises(self):
        """Test an incoherent marking raises IncoherentMarkingError."""
        G = MarkedBasis(Y, (marked(Y, (1, 0, 1), (0, 2, 0)), marked(Y, (0, 2, 0), (1, 0, 1))))
        with pytest.raises(IncoherentMarkingError):
            is_groebner_basis_of(G, [Binomial(Y.monomial((1, 0, 1)), Y.monomial((0, 2, 0)))])

    def test_quadrics_miss_cubic_ideal(self):
        """Test quadrics are not a Gröbner basis of a different principal ideal."""
        Z = Ring(("a", "b", "c"))
        G = MarkedBasis(Z, (marked(Z, (2, 0, 0), (0, 1, 1)),))
        cubic = Binomial(Z.monomial((3, 0, 0)), Z.monomial((0, 0, 3)))
        assert not is_groebner_basis_of(G, [cubic])

    def test_incomplete_basis_fails_generators(self):
        """Test dropping an element fails the generator condition."""
        C = veronese_configuration(3, 2)
        P = C.presentation()
        G = toric_basis(C, grevlex(P.source), presentation=P)
        partial = MarkedBasis(G.ring, G.elements[1:])
        check = check_groebner_basis(partial, toric_generators(C, presentation=P))
        assert check.members_in_ideal
        assert not check.holds


class TestInitialIdeal:
    """Test cases for initial ideal utilities."""

    def test_generators_are_minimal(self):
        """Test a lead divisible by another lead is dropped."""
        Z = Ring(("a", "b", "c"))
        G = MarkedBasis(Z, (marked(Z, (1, 1, 0), (0, 0, 2)), marked(Z, (2, 1, 0), (0, 0, 3))))
        assert initial_ideal_generators(G) == [Z.monomial((1, 1, 0))]
        assert is_squarefree_initial(G)
        assert not is_reduced(G)
        assert max_degree(G) == 3

    def test_square_lead(self):
        """Test a squared lead makes the initial ideal non-squarefree."""
        G = MarkedBasis(Y, (marked(Y, (0, 2, 0), (1, 0, 1)),))
        assert not is_squarefree_initial(G)
        assert is_reduced(G)
        assert max_degree(MarkedBasis(Y, ())) == 0
