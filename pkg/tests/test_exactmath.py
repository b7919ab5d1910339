from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from arrkit.exactmath import (Echelon, MPoly, RatMatrix, UPoly, bareiss_det, det_poly, dim_homogeneous,
                              monomials, mpoly_divides, parse_mpoly, parse_rat, rat_str)

coef = st.integers(-6, 6)


@st.composite
def polys(draw, n=2, maxdeg=3):
    terms = {}
    for _ in range(draw(st.integers(0, 5))):
        e = tuple(draw(st.integers(0, maxdeg)) for _ in range(n))
        terms[e] = draw(coef)
    return MPoly(n, terms)


@given(polys(), polys(), polys())
def test_ring_laws(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert not (f - f)


@given(polys(), polys())
def test_divmod_reconstructs(f, g):
    if not g:
        return
    q, r = (f * g).divmod(g)
    assert q == f and not r
    q, r = f.divmod(g)
    assert q * g + r == f


@given(polys(n=3, maxdeg=2))
def test_parse_round_trip(f):
    assert parse_mpoly(f.to_str(), 3) == f


def test_exact_div_and_divides():
    x, y = MPoly.var(0, 2), MPoly.var(1, 2)
    ok, q = mpoly_divides(x - y, x * x - y * y)
    assert ok and q == x + y
    assert mpoly_divides(x, y)[0] is False


def test_diff_and_compose():
    x, y = MPoly.var(0, 2), MPoly.var(1, 2)
    f = x ** 3 * y + 2 * y
    assert f.diff(0) == 3 * x ** 2 * y
    assert f.compose([y, x]) == y ** 3 * x + 2 * x


def test_monomial_counts():
    for n in range(1, 4):
        for d in range(5):
            assert len(monomials(n, d)) == dim_homogeneous(n, d)


@settings(max_examples=40)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3))
def test_bareiss_matches_fraction_det(rows):
    M = RatMatrix([[Fraction(v) for v in r] for r in rows], 3)
    assert bareiss_det(rows, divide=lambda a, b: Fraction(a, b)) == M.det()


@given(st.lists(st.dictionaries(st.integers(0, 4), st.integers(-3, 3), max_size=4), max_size=6))
def test_echelon_rank_matches_dense(rows):
    ech = Echelon(5)
    for r in rows:
        ech.add({k: v for k, v in r.items() if v})
    dense = RatMatrix([[r.get(j, 0) for j in range(5)] for r in rows], 5) if rows else None
    assert ech.rank == (dense.rank() if dense else 0)


def test_kernel_is_kernel():
    ech = Echelon(3)
    ech.add({0: 1, 1: 1})
    ech.add({1: 1, 2: -1})
    (k,) = ech.kernel()
    assert k[0] + k[1] == 0 and k[1] - k[2] == 0 and any(k)


def test_det_poly_vandermonde():
    x = [MPoly.var(i, 3) for i in range(3)]
    M = [[xi ** p for xi in x] for p in range(3)]
    d = det_poly(M)
    assert d == (x[1] - x[0]) * (x[2] - x[0]) * (x[2] - x[1])


def test_upoly_roots_and_strings():
    p = UPoly.from_roots([0, 1, 2])
    assert p.to_str("t") == "t^3 - 3t^2 + 2t"
    assert p(3) == 6
    q, r = p.divmod(UPoly([-1, 1]))
    assert r.is_zero() and q == UPoly.from_roots([0, 2])


def test_rat_strings():
    assert rat_str(Fraction(-3, 4)) == "-3/4"
    assert parse_rat("-3/4") == Fraction(-3, 4)
    with pytest.raises(Exception):
        parse_rat("0.75x")
