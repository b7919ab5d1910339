from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from arrkit import arrangement as ar
from arrkit.catalan import (CatalanError, F, catalan_basis, fpi_decompose, lift_to_full, reconstruct,
                            symmetric_basis)
from arrkit.exactmath import MPoly

x1, x2 = MPoly.var(0, 2), MPoly.var(1, 2)


def test_fpi_small_cases():
    assert fpi_decompose(x1 * x1 + x2 * x2) == {(0, 1): MPoly.const(Fraction(1, 3), 2),
                                               (2, 0): MPoly.const(Fraction(2, 3), 2)}
    assert fpi_decompose(x1 + x2) == {(1, 0): MPoly.const(1, 2)}
    assert fpi_decompose((x1 - x2) ** 2) == {(0, 1): MPoly.const(1, 2)}


def test_F_definition():
    assert F(2, 0) == x1 * x1 + x1 * x2 + x2 * x2
    assert F(0, 1) == (x1 - x2) ** 2


def test_not_invariant_is_rejected():
    with pytest.raises(CatalanError):
        fpi_decompose(x1)


@st.composite
def invariant_polys(draw):
    n = draw(st.sampled_from([2, 3]))
    G = MPoly.zero(n)
    for _ in range(draw(st.integers(1, 3))):
        p, r, bd = draw(st.integers(0, 3)), draw(st.integers(0, 2)), draw(st.integers(0, 2))
        basis = symmetric_basis(bd, n)
        _, s = basis[draw(st.integers(0, len(basis) - 1))]
        G = G + s.scale(draw(st.integers(-4, 4))) * F(p, r, n)
    return n, G


@settings(max_examples=50, deadline=None)
@given(invariant_polys())
def test_fpi_round_trip(case):
    n, G = case
    assert reconstruct(fpi_decompose(G, n), n) == G


def test_lift_to_full_is_tangent_to_the_sum_hyperplane():
    from arrkit.logmodule import Derivation

    d = Derivation([MPoly.var(0, 2), MPoly.var(1, 2) ** 2])
    L = lift_to_full(d, 3)
    assert not L.apply_linear((1, 1, 1))


@pytest.mark.parametrize("n,exps", [(2, (0, 1, 3)), (3, (0, 1, 4, 5))])
def test_catalan_basis(n, exps):
    cert = catalan_basis(n)
    assert cert.exponents == exps
    A = ar.catalan(n)
    for e in cert.eta_tilde:
        assert e.is_member(A)
    assert cert.saito.determinant == A.defining_polynomial().scale(cert.saito.scalar)


def test_catalan_budget():
    with pytest.raises(ValueError):
        catalan_basis(4)
    with pytest.raises(ValueError):
        catalan_basis(1)
