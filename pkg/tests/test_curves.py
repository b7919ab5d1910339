import pytest

from arrkit import arrangement as ar
from arrkit.curves import (CurveError, CurvePair, bezout_refutation, bezout_report, choose_alpha, curve_pair,
                           local_mult, resultant_v)
from arrkit.exactmath import MPoly, UPoly
from arrkit.lattice import PlanarPoint

u, v = MPoly.var(0, 2), MPoly.var(1, 2)


def test_local_mult_basic():
    assert local_mult(u, v, (0, 0)) == 1
    assert local_mult(v, v - u * u, (0, 0)) == 2
    assert local_mult(u - 1, v, (0, 0)) == 0


def test_local_mult_shared_component():
    with pytest.raises(CurveError):
        local_mult(u * v, u * (v - 1), (0, 0), N=4)


def test_resultant():
    R = resultant_v(v - u * u, v)
    assert R == UPoly([0, 0, 1]) or R == UPoly([0, 0, -1])


def test_two_lines():
    P = PlanarPoint((0, 0), 1, (0, 1))
    pair = CurvePair((1, 0), u, v, (1, 1), [(P, 1)])
    rep = bezout_report(pair)
    assert rep.ok and rep.rows[0]["mult"] == 1


def test_extended_stanley_curves():
    pair = curve_pair(ar.stanley_extended())
    assert pair.degrees == (2, 5)
    assert sum(m for _, m in pair.points) == 10
    assert all(P.mu == m for P, m in pair.points)
    rep = bezout_report(pair)
    assert rep.ok and rep.at_infinity == 0 and rep.extra_affine == 0


def test_boolean_gives_lines():
    pair = curve_pair(ar.boolean(3))
    assert pair.degrees == (1, 1)
    assert pair.c1.degree() == 1 and pair.c2.degree() == 1


def test_other_pivot_and_alpha():
    A = ar.stanley_extended()
    pair = curve_pair(A, h0=0, alpha=(1, 3))
    assert bezout_report(pair).ok
    dec = ar.decone(A, 0)
    bad = tuple(int(c) for c in dec.lines[0].normal)
    with pytest.raises(CurveError):
        curve_pair(A, alpha=bad)
    a = choose_alpha(dec.lines)
    assert all(a[0] * L.normal[1] != a[1] * L.normal[0] for L in dec.lines)


def test_not_free_rejected():
    with pytest.raises(CurveError):
        curve_pair(ar.stanley())


def test_stanley_refutation():
    ref = bezout_refutation(ar.stanley(), 0)
    assert ref.exponents == (1, 3, 3)
    assert ref.refuted
    assert ref.offending == [{"line": 1, "points": 5, "degree": 3}]
