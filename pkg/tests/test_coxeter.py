import pytest

from arrkit.coxeter import (RatFunc, constant_multiplicity_basis, dP, group_matrices, invariant_module,
                            invariant_piece, is_invariant, make_typeA, nabla, phi_k, primitive_derivation,
                            psi_k, rational_to_derivation, reynolds)
from arrkit.exactmath import MPoly
from arrkit.logmodule import saito_check


@pytest.fixture(scope="module")
def A2():
    return make_typeA(2)


@pytest.fixture(scope="module")
def A3():
    return make_typeA(3)


def test_invariants_and_jacobian(A2, A3):
    assert (A2.h, A2.degrees, A2.exponents) == (3, (2, 3), (1, 2))
    assert (A3.h, A3.degrees) == (4, (2, 3, 4))
    for C in (A2, A3):
        Q = C.arrangement.defining_polynomial()
        assert C.jacobian == Q.scale(C.scalar)


def test_invariants_are_invariant(A3):
    for M in group_matrices(A3):
        for P in A3.invariants:
            imgs = [MPoly.linear(row) for row in M]
            assert P.compose(imgs) == P


@pytest.mark.parametrize("ell", [2, 3])
def test_dual_derivations(ell):
    C = make_typeA(ell)
    for i in range(1, ell + 1):
        for j, P in enumerate(C.invariants, 1):
            v = dP(C, P, i)
            assert v.is_polynomial() and v.as_poly() == MPoly.const(1 if i == j else 0, ell)


def test_dP_of_square(A2):
    P1 = A2.invariants[0]
    assert dP(A2, P1 * P1, 1) == RatFunc(P1.scale(2))


def test_primitive_derivation_kills_lower_invariants(A3):
    D = primitive_derivation(A3)
    for P in A3.invariants[:-1]:
        assert nabla(D, P).is_zero()


def test_psi_and_phi_laws(A2):
    gens = invariant_module(A2, 1, window=A2.h).generators
    A = A2.arrangement
    for k in (1, 2):
        for g in gens:
            psi = psi_k(A2, g, k, mult=1)
            assert psi.degree == g.degree + k * A2.h
            assert psi.is_member(A.with_mult(2 * k + 1))
            assert is_invariant(A2, psi)
    for g in gens:
        om = phi_k(A2, g, 1, mult=1)
        assert om.degree == g.degree - A2.h
        assert om.is_member(A, [1] * A.size)


def test_nabla_lowers_the_filtration(A2):
    D = primitive_derivation(A2)
    for g in invariant_module(A2, 5).generators:
        r = rational_to_derivation(nabla(D, g))
        assert r.is_member(A2.arrangement.with_mult(3))
        assert is_invariant(A2, r)


def test_reynolds_agrees_with_linear(A2):
    for d in range(6):
        lin = invariant_piece(A2, 3, d, "linear")
        rey = invariant_piece(A2, 3, d, "reynolds")
        assert len(lin) == len(rey)
    for F in invariant_piece(A2, 1, 2):
        assert reynolds(A2, F) == F


@pytest.mark.parametrize("ell,m,exps", [(2, 1, (1, 2)), (2, 2, (3, 3)), (2, 3, (4, 5)), (2, 4, (6, 6)),
                                        (3, 2, (4, 4, 4))])
def test_constant_multiplicity(ell, m, exps):
    C = make_typeA(ell)
    cert = saito_check(C.arrangement.with_mult(m), constant_multiplicity_basis(C, m))
    assert cert.exponents == exps


def test_invariant_generators(A2):
    for m, degs in ((1, [1, 2]), (3, [4, 5]), (5, [7, 8])):
        assert invariant_module(A2, m).degrees == degs


def test_type_a1():
    C = make_typeA(1)
    assert C.h == 2 and C.degrees == (2,)
