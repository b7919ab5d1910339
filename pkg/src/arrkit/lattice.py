"""Intersection lattice, Moebius function and the counting polynomials."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Multiarrangement, decone
from .exactmath import Echelon, RatMatrix, UPoly


@dataclass(frozen=True)
class Flat:
    """Intersection of hyperplanes, keyed by the row-reduced span of its covectors."""

    span: tuple     # rows of the RREF of the covectors vanishing on it
    contains: frozenset
    codim: int

    def __le__(self, other):
        # reverse inclusion of subspaces = inclusion of hyperplane sets
        return self.contains <= other.contains

    def __lt__(self, other):
        return self.contains < other.contains


def _span_key(rows, dim):
    if not rows:
        return ()
    red, piv, r = RatMatrix(rows, dim).rref()
    return tuple(red.entries[:r])


class IntersectionLattice:
    def __init__(self, A: Multiarrangement, flats_by_codim, moebius):
        self.arrangement = A
        self.flats_by_codim = flats_by_codim
        self.moebius = moebius

    @property
    def flats(self):
        return [X for level in self.flats_by_codim for X in level]

    @property
    def top(self):
        """The ambient space V (codimension 0)."""
        return self.flats_by_codim[0][0]

    @property
    def rank(self):
        return len(self.flats_by_codim) - 1

    def counts(self):
        return [len(level) for level in self.flats_by_codim]

    def flats_in(self, h):
        """Flats contained in the h-th hyperplane."""
        return [X for X in self.flats if h in X.contains]

    def to_json(self):
        index = {X: i for i, X in enumerate(self.flats)}
        return {
            "flats_by_codim": [
                [{"id": index[X], "hyperplanes": sorted(X.contains)} for X in level]
                for level in self.flats_by_codim
            ],
            "moebius": {str(index[X]): self.moebius[X] for X in self.flats},
            "chi": char_poly(self).int_coeffs(),
        }


def build_lattice(A: Multiarrangement) -> IntersectionLattice:
    """Flats by incremental closure, codimension by codimension."""
    active = A.active
    if not active:
        raise ValueError("lattice needs at least one hyperplane with m >= 1")
    dim = A.dim
    covs = {i: A.hyperplanes[i] for i in active}
    top = Flat((), frozenset(), 0)
    levels = [[top]]
    seen = {(): top}
    # codim 1
    level = []
    for i in active:
        key = _span_key([covs[i]], dim)
        if key not in seen:
            X = Flat(key, frozenset([i]), 1)
            seen[key] = X
            level.append(X)
    levels.append(level)
    while True:
        nxt = []
        for X in levels[-1]:
            for i in active:
                if i in X.contains:
                    continue
                rows = [list(r) for r in X.span] + [list(covs[i])]
                key = _span_key(rows, dim)
                if key in seen:
                    continue
                ech = Echelon(dim)
                for r in key:
                    ech.add({j: v for j, v in enumerate(r) if v})
                contains = frozenset(
                    j for j in active
                    if ech.contains({c: v for c, v in enumerate(covs[j]) if v})
                )
                Y = Flat(key, contains, len(key))
                seen[key] = Y
                nxt.append(Y)
        if not nxt:
            break
        nxt.sort(key=lambda Y: sorted(Y.contains))
        levels.append(nxt)
    mu = moebius_recursive(levels)
    return IntersectionLattice(A, levels, mu)


def moebius_recursive(levels):
    """mu(V) = 1, mu(X) = -sum_{Y < X} mu(Y)."""
    mu = {}
    flats = [X for level in levels for X in level]
    for X in flats:
        if X.codim == 0:
            mu[X] = 1
            continue
        mu[X] = -sum(mu[Y] for Y in flats if Y.codim < X.codim and Y.contains < X.contains)
    return mu


def moebius_by_zeta_inversion(L: IntersectionLattice):
    """mu(V, X) read off the inverse of the zeta matrix of the poset."""
    flats = L.flats
    n = len(flats)
    zeta = RatMatrix([[1 if flats[i].contains <= flats[j].contains else 0 for j in range(n)]
                      for i in range(n)], n)
    # solve zeta^T-style upper-triangular system row by row: e_0 = x * zeta
    inv_row = [Fraction(0)] * n
    for j in range(n):
        s = (1 if j == 0 else 0) - sum(inv_row[i] * zeta[i, j] for i in range(j))
        inv_row[j] = s / zeta[j, j]
    return {flats[j]: int(inv_row[j]) for j in range(n)}


def char_poly(arg) -> UPoly:
    """chi(A, t) = sum_X mu(X) t^(dim X)."""
    L = arg if isinstance(arg, IntersectionLattice) else build_lattice(arg)
    dim = L.arrangement.dim
    coeffs = [0] * (dim + 1)
    for X, m in L.moebius.items():
        coeffs[dim - X.codim] += m
    return UPoly(coeffs)


def poincare_poly(arg) -> UPoly:
    """pi(t) = (-t)^ell chi(-1/t)."""
    chi = char_poly(arg)
    ell = (arg.arrangement if isinstance(arg, IntersectionLattice) else arg).dim
    cs = chi.poly_coeffs() + [0] * (ell + 1)
    # coefficient of t^k in pi is (-1)^k * [t^(ell-k)] chi
    return UPoly([(-1) ** k * cs[ell - k] for k in range(ell + 1)])


def chamber_count(arg) -> int:
    """Number of regions of a real arrangement, |chi(-1)|."""
    return abs(char_poly(arg)(-1))


def betti(arg, k: int) -> int:
    return poincare_poly(arg).coeff(k)


DEFAULT_ENUM_BUDGET = 200_000


def _is_prime(q):
    return q >= 2 and all(q % p for p in range(2, int(q**0.5) + 1))


def fq_count(A: Multiarrangement, q: int, mode: str = "formula", budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """Points of F_q^ell off the arrangement.

    ``formula`` evaluates chi(q); ``enumerate`` counts points literally
    (q prime, q^ell within ``budget``).
    """
    if mode == "formula":
        return char_poly(A)(q)
    if mode != "enumerate":
        raise ValueError(f"unknown mode {mode!r}")
    if not _is_prime(q):
        raise ValueError("enumeration mode supports prime q only")
    if q ** A.dim > budget:
        raise ValueError(f"enumeration of {q}^{A.dim} points exceeds budget {budget}")
    covs = [A.hyperplanes[i] for i in A.active]
    count = 0
    for pt in itertools.product(range(q), repeat=A.dim):
        if all(sum(a * x for a, x in zip(c, pt)) % q for c in covs):
            count += 1
    return count


def good_reduction(A: Multiarrangement, q: int) -> bool:
    """True when no nonzero minor of the covector matrix vanishes mod q.

    Then the matroid, hence chi, is unchanged by reduction mod q.
    """
    covs = [A.hyperplanes[i] for i in A.active]
    for r in range(1, min(A.dim, len(covs)) + 1):
        for rows in itertools.combinations(covs, r):
            for cols in itertools.combinations(range(A.dim), r):
                d = RatMatrix([[row[c] for c in cols] for row in rows], r).det()
                if d and d.numerator % q == 0:
                    return False
    return True


@dataclass(frozen=True)
class PlanarPoint:
    coords: tuple
    mu: int
    lines: tuple  # hyperplane indices of the lines through the point


def _meet(l1, l2):
    (a, b), e = l1.normal, l1.offset
    (c, d), f = l2.normal, l2.offset
    det = a * d - b * c
    if det == 0:
        return None
    # a u + b v = -e, c u + d v = -f
    u = (-e * d + b * f) / det
    v = (-a * f + c * e) / det
    return (u, v)


def l2_points(A: Multiarrangement, h0: int = 0):
    """Multiple points of the deconing at h0, with mu(p) = #lines through p - 1."""
    if A.rank != 3 or A.dim != 3:
        raise ValueError("l2_points needs an essential rank-3 arrangement")
    dec = decone(A, h0)
    points = {}
    for l1, l2 in itertools.combinations(dec.lines, 2):
        p = _meet(l1, l2)
        if p is None:
            continue
        points.setdefault(p, set()).update((l1.source, l2.source))
    out = []
    for p, srcs in points.items():
        on = tuple(sorted(l.source for l in dec.lines
                          if l.normal[0] * p[0] + l.normal[1] * p[1] + l.offset == 0))
        out.append(PlanarPoint(p, len(on) - 1, on))
    out.sort(key=lambda P: P.coords)
    return out


def lattice_report(A: Multiarrangement) -> str:
    return json.dumps(build_lattice(A).to_json())
