from fractions import Fraction

import pytest

from arrkit import arrangement as ar
from arrkit.exactmath import UPoly, dim_homogeneous
from arrkit.lattice import char_poly
from arrkit.logmodule import FitError, GradedDims
from arrkit.solomonterao import (HilbertRational, chern_check, chern_from_hilbert_poly, d_hilbert,
                                 exponents_from_hilbert, fit_hilbert, fitted_exponents, limit_chi,
                                 omega_hilbert, phi_polynomial, solomon_terao_chi)


def test_single_hyperplane():
    A = ar.make(1, [(1,)])
    assert solomon_terao_chi(A) == UPoly([-1, 1])


def test_boolean_plane_with_multiplicity():
    A = ar.boolean(2)
    assert solomon_terao_chi(A, mult=[2, 2]) == UPoly.from_roots([2, 2])


@pytest.mark.parametrize("A", [ar.braid(3), ar.boolean(3), ar.stanley_extended()])
def test_limit_matches_lattice(A):
    assert solomon_terao_chi(A) == char_poly(A)


def test_omega_zero_is_polynomial_ring():
    H, _ = omega_hilbert(ar.boolean(2), 0)
    for d in range(6):
        assert H.coefficient(d) == dim_homogeneous(2, d)


def test_hilbert_coefficients_and_polynomial():
    H = HilbertRational(UPoly([0, 1, 1]), 2)  # x + x^2 over (1-x)^2
    assert [H.coefficient(d) for d in range(4)] == [0, 1, 3, 5]
    P = H.hilbert_polynomial()
    assert all(P(d) == H.coefficient(d) for d in range(2, 8))


def test_fit_needs_a_stable_window():
    dims = GradedDims("toy", {0: 1, 1: 3, 2: 6})
    with pytest.raises(FitError):
        fit_hilbert(dims, 2)


def test_free_shape_exponents():
    H, _ = d_hilbert(ar.stanley_extended())
    assert exponents_from_hilbert(H) == (1, 2, 5)
    H, _ = d_hilbert(ar.stanley())
    assert exponents_from_hilbert(H) is None
    assert fitted_exponents(ar.boolean(2).with_mult([2, 3])) == (2, 3)


def test_phi_degree_zero_terms():
    phi = phi_polynomial(ar.boolean(2))
    # Omega^0 = S contributes numerator 1
    assert phi.series(0).numerator == UPoly([1])
    assert limit_chi(phi) == UPoly.from_roots([1, 1])


def test_chern_inversion():
    # rank 2, c1 = -3, c2 = 2 bundle O(-1) + O(-2): chi(E(d)) = C(d+1,2) + C(d,2)
    P = UPoly([0, 0, 1])  # d^2
    assert chern_from_hilbert_poly(P) == (2, Fraction(-3), Fraction(2))


@pytest.mark.parametrize("A,want", [(ar.stanley(), [1, -6, 9]), (ar.boolean(3), [1, -2, 1]),
                                    (ar.stanley_extended(), [1, -7, 10])])
def test_chern_check(A, want):
    rep = chern_check(A)
    assert rep.rank == 2
    assert rep.chern.int_coeffs() == want
    assert rep.agrees


def test_chern_rejects_bad_input():
    with pytest.raises(ValueError):
        chern_check(ar.braid(3))
