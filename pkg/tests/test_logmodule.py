import json

import pytest
from hypothesis import given, settings, strategies as st

from arrkit import arrangement as ar
from arrkit.exactmath import MPoly, UPoly, dim_homogeneous, mpoly_divides
from arrkit.lattice import char_poly
from arrkit.logmodule import (AdditionDeletionError, Derivation, NonMemberError, ProperMultipleError,
                              ZeroDeterminantError, addition_chain, addition_deletion, certificate_from_json,
                              check_triple, d0_piece, d_dim, d_graded_piece, delta_p, euler, euler_decompose,
                              free_dims, freeness_test, infer_exponents, m_star, minimal_generators,
                              omega_dim, partial, rank2_exponents, restrict_derivation, saito_check,
                              verify_certificate, ziegler_coker_dim)


def member_oracle(delta, A):
    """alpha^m | delta(alpha) for every hyperplane, straight from the definition."""
    for cov, k in zip(A.hyperplanes, A.mult):
        if k == 0:
            continue
        a = MPoly.linear(cov)
        val = delta.apply_linear(cov)
        if val and not mpoly_divides(a ** k, val)[0]:
            return False
    return True


@st.composite
def small_derivations(draw, n=3, deg=2):
    coeffs = []
    for _ in range(n):
        terms = {}
        for _ in range(draw(st.integers(0, 3))):
            e = [0] * n
            for _ in range(deg):
                e[draw(st.integers(0, n - 1))] += 1
            terms[tuple(e)] = draw(st.integers(-2, 2))
        coeffs.append(MPoly(n, terms))
    return Derivation(coeffs)


@settings(max_examples=60, deadline=None)
@given(small_derivations(), st.sampled_from(["braid3", "boolean3", "stanley", "mult"]))
def test_membership_agrees_with_definition(delta, which):
    A = {"braid3": ar.braid(3), "boolean3": ar.boolean(3), "stanley": ar.stanley(),
         "mult": ar.boolean(3).with_mult([2, 1, 0])}[which]
    assert delta.is_member(A) == member_oracle(delta, A)


@settings(max_examples=30, deadline=None)
@given(small_derivations(deg=1))
def test_combinations_of_a_basis_are_members(coefs):
    A = ar.stanley_extended()
    cert = freeness_test(A).certificate
    total = Derivation.zero(3)
    for b, c in zip(cert.basis, coefs.coeffs):
        total = total + b.mul(c)
    assert total.is_member(A)


@pytest.mark.parametrize("A", [ar.braid(3), ar.braid(4), ar.stanley(), ar.catalan(2)])
def test_euler_is_logarithmic(A):
    assert euler(A.dim).is_member(A)


@pytest.mark.parametrize("A", [ar.stanley(), ar.stanley_extended(), ar.boolean(3)])
def test_euler_splitting_dims(A):
    for d in range(1, 6):
        assert d_dim(A, d) == dim_homogeneous(3, d - 1) + len(d0_piece(A, 0, d))


def test_euler_decompose():
    A = ar.stanley()
    for delta in d_graded_piece(A, 3):
        f, d0 = euler_decompose(A, 0, delta)
        assert not d0.apply_linear(A.hyperplanes[0])
        assert f + d0 == delta
        assert f.coeffs[0] * euler(3).coeffs[1] == f.coeffs[1] * euler(3).coeffs[0]
        assert d0.is_member(A)


@pytest.mark.parametrize("A", [ar.stanley(), ar.stanley_extended()])
def test_ziegler_restriction_lands_in_multiarrangement(A):
    R = ar.ziegler_restrict(A, 0)
    for d in range(1, 5):
        for delta in d0_piece(A, 0, d):
            assert restrict_derivation(delta, R.chart).is_member(R.ambient)


def test_rank2_exponents():
    gen = ar.generic(2, 3, seed=1)
    assert rank2_exponents(gen.with_mult(2)) == (3, 3)
    assert rank2_exponents(ar.boolean(2).with_mult([2, 3])) == (2, 3)
    assert rank2_exponents(ar.ziegler_restrict(ar.stanley(), 0).ambient) == (1, 5)


def test_minimal_generators():
    assert minimal_generators(ar.braid(3)).degrees == [0, 1, 2]
    assert minimal_generators(ar.stanley()).degrees == [1, 2, 5, 5]
    assert minimal_generators(ar.stanley_extended()).degrees == [1, 2, 5]


@pytest.mark.parametrize("name", ["braid3", "braid4", "boolean3", "stanley_extended", "catalan2", "catalan3",
                                  "boolean4"])
def test_free_verdicts_are_consistent(name):
    from arrkit.cli import load_arrangement

    A = load_arrangement(name)
    v = freeness_test(A)
    assert v.is_free
    assert sum(v.exponents) == A.size
    assert char_poly(A) == UPoly.from_roots(v.exponents)
    assert verify_certificate(A, v.certificate)
    for d in range(0, 7):
        assert d_dim(A, d) == free_dims(v.exponents, A.dim, d)


def test_stanley_not_free():
    v = freeness_test(ar.stanley())
    assert v.kind == "not_free"
    assert v.to_json()["witness"] == "restriction exponents (1,5) != (3,3)"
    z = ziegler_coker_dim(ar.stanley(), 0)
    assert (z.dim, z.prediction, z.by_degree) == (4, 4, {0: 0, 1: 1, 2: 1, 3: 1, 4: 1, 5: 0})


def test_generic_four_planes_not_free():
    A = ar.make(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], [1, 1, 1, 1])
    v = freeness_test(A)
    assert v.kind == "not_free"


def test_saito_errors():
    A = ar.braid(3)
    with pytest.raises(NonMemberError):
        saito_check(A, [delta_p(3, 0), delta_p(3, 1), partial(3, 0).mul(MPoly.var(0, 3) ** 2)])
    with pytest.raises(ZeroDeterminantError):
        saito_check(A, [delta_p(3, 0), delta_p(3, 1), delta_p(3, 1)])
    with pytest.raises(ProperMultipleError):
        saito_check(A, [delta_p(3, 0), delta_p(3, 1), delta_p(3, 2).mul(MPoly.var(0, 3) + MPoly.var(1, 3))])


def test_certificate_json_round_trip():
    A = ar.stanley_extended()
    cert = freeness_test(A).certificate
    again = certificate_from_json(json.loads(json.dumps(cert.to_json())), 3)
    assert verify_certificate(A, again)
    assert again.determinant == cert.determinant


def test_omega_dims():
    A = ar.boolean(2)
    # Omega^0 is S; Omega^2 of a free arrangement is S/Q in degree -|m| onwards
    assert [omega_dim(A, 0, d) for d in range(3)] == [1, 2, 3]
    assert omega_dim(A, 2, -2) == 1


def test_addition_deletion_boolean():
    rec = addition_deletion(ar.boolean(3).with_mult([2, 1, 1]), 0, compute=("A'", "A''"))
    assert rec.verdict == "free" and rec.exponents["A"] == (1, 1, 2)


def test_m_star_and_chain():
    A = ar.catalan(2)
    steps = addition_chain(A)
    assert [s.exponents for s in steps][-1] == (0, 1, 3)
    # simple arrangements get m* = 1; the doubled braid line gets 2
    assert m_star(ar.braid(3), 0, [1, 2]) == 1
    assert m_star(ar.braid(3).with_mult([2, 1, 1]), 0, [1, 2]) == 2


def test_infer_and_check_triple():
    assert tuple(infer_exponents(None, [1, 1], [1])) == (1, 2)
    with pytest.raises(AdditionDeletionError):
        check_triple((1, 2, 2), (1, 1, 1), (1, 3))
