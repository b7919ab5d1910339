import pytest
from hypothesis import given, settings, strategies as st

from arrkit import arrangement as ar
from arrkit.lattice import (build_lattice, chamber_count, char_poly, fq_count, good_reduction, l2_points,
                            moebius_by_zeta_inversion, poincare_poly)
from arrkit.exactmath import UPoly


def test_arr_round_trip():
    A = ar.stanley_extended().with_mult([1, 2, 1, 1, 3, 1, 1, 1])
    assert ar.parse_arr(ar.to_arr(A)) == A


@pytest.mark.parametrize("text", ["H 1 0", "dim 2\nH 1", "dim 2\nH 1 x", "dim 2\nQ 1 0", "dim 2\nH 1 0 m=-1"])
def test_malformed_arr(text):
    with pytest.raises(ar.ArrangementError):
        ar.parse_arr(text)


def test_canonical_covectors_merge():
    A = ar.make(2, [(2, 4), (1, 2), (0, 3)])
    assert len(A.hyperplanes) == 2


def test_braid_and_boolean_chi():
    for n in (2, 3, 4):
        assert char_poly(ar.braid(n)) == UPoly.from_roots(range(n))
        assert char_poly(ar.boolean(n)) == UPoly.from_roots([1] * n)


def test_poincare_and_chambers():
    assert poincare_poly(ar.braid(3)) == UPoly([1, 3, 2])
    assert chamber_count(ar.boolean(3)) == 8
    assert chamber_count(ar.stanley()) == 32


def test_fq_enumeration_matches_formula():
    for A in (ar.braid(3), ar.boolean(3), ar.stanley()):
        for q in (5, 7):
            if good_reduction(A, q):
                assert fq_count(A, q, mode="enumerate") == fq_count(A, q)


def test_fq_limits():
    with pytest.raises(ValueError):
        fq_count(ar.braid(3), 4, mode="enumerate")
    with pytest.raises(ValueError):
        fq_count(ar.braid(4), 7, mode="enumerate", budget=100)


rank3 = st.lists(st.tuples(*[st.integers(-3, 3)] * 3).filter(any), min_size=3, max_size=7)


@settings(max_examples=25, deadline=None)
@given(rank3)
def test_moebius_two_ways(covs):
    A = ar.make(3, covs).simple()
    L = build_lattice(A)
    assert L.moebius == moebius_by_zeta_inversion(L)
    assert char_poly(L)(1) == 0


@settings(max_examples=25, deadline=None)
@given(rank3, st.integers(0, 6))
def test_ziegler_conservation(covs, h):
    A = ar.make(3, covs).simple()
    h %= len(A.hyperplanes)
    R = ar.ziegler_restrict(A, h)
    assert R.ambient.size == A.size - 1


def test_restriction_origin_map():
    R = ar.restrict(ar.braid(4), 0)
    assert sorted(i for o in R.origin_map for i in o) == list(range(1, 6))
    assert R.ambient.dim == 3


def test_decone_and_l2():
    A = ar.stanley()
    dec = ar.decone(A, 0)
    assert len(dec.lines) == 6
    pts = l2_points(A, 0)
    # flats inside H0 carry |A| - 1 of b_2, the rest sits on the affine plane
    assert sum(P.mu for P in pts) == poincare_poly(A).coeff(2) - (A.size - 1)
    on_h1 = [P for P in pts if 1 in P.lines]
    assert len(on_h1) == 5


def test_essentialize_braid():
    E, _ = ar.essentialize(ar.braid(4))
    assert E.dim == 3 and E.rank == 3
    assert char_poly(E) * UPoly([0, 1]) == char_poly(ar.braid(4))


def test_localize_delete_add():
    A = ar.braid(3)
    X = build_lattice(A).flats_by_codim[2][0]
    assert ar.localize(A, X).size == 3
    B = ar.delete(A, 0)
    assert B.size == 2
    assert ar.add(B, A.hyperplanes[0]).size == 3


def test_catalan_structure():
    A = ar.catalan(2)
    assert A.size == 4 and A.dim == 3
    assert char_poly(A) == UPoly.from_roots([0, 1, 3])
