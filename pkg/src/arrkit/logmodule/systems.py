"""Linear systems for graded pieces of D(A, m) and Omega^p(A, m).

The condition "alpha^m divides g" for a degree-``d`` polynomial ``g`` is
linearized by the coordinate change y_k = alpha (k the lowest index with
a_k != 0), y_j = x_j otherwise: the coefficients of y_k^s, s < m, must vanish.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb

from ..exactmath import MPoly, monomial_index, monomials, dim_homogeneous


@lru_cache(maxsize=None)
def _neg_L_powers(alpha: tuple, k: int, rmax: int):
    n = len(alpha)
    L = MPoly.linear([-alpha[j] for j in range(n) if j != k])
    pw = [MPoly.const(1, n - 1)]
    for _ in range(rmax):
        pw.append(pw[-1] * L)
    return tuple(tuple(p.items()) for p in pw)


@lru_cache(maxsize=None)
def divisibility_table(alpha: tuple, m: int, d: int):
    """For each degree-d monomial (by index): list of (rowkey, integer coefficient).

    Row key ``(s, beta)`` is the coefficient of y_k^s * y'^beta after the
    coordinate change, scaled by a_k^d.  ``alpha^m | g`` iff all rows vanish.
    """
    n = len(alpha)
    k = next(i for i, a in enumerate(alpha) if a)
    ak = alpha[k]
    mons = monomials(n, d)
    pw = _neg_L_powers(alpha, k, d)
    table = []
    for e in mons:
        ek = e[k]
        rest = e[:k] + e[k + 1:]
        entries = []
        scale = ak ** (d - ek)
        for s in range(min(m, ek + 1)):
            c0 = scale * comb(ek, s)
            for beta, c in pw[ek - s]:
                key = (s, tuple(x + y for x, y in zip(beta, rest)))
                entries.append((key, c0 * c))
        table.append(entries)
    return table


def _add(rows, key, col, val):
    r = rows.get(key)
    if r is None:
        rows[key] = {col: val}
    else:
        v = r.get(col, 0) + val
        if v:
            r[col] = v
        else:
            del r[col]


def derivation_rows(A, d: int):
    """Constraint rows for delta = sum f_i d_i with f_i of degree d.

    Column of (i, monomial index j) is i*M + j with M = dim S_d.
    """
    n = A.dim
    M = dim_homogeneous(n, d)
    out = []
    for h in A.active:
        alpha = A.hyperplanes[h]
        table = divisibility_table(alpha, A.mult[h], d)
        rows: dict = {}
        for j, entries in enumerate(table):
            for key, val in entries:
                for i, a in enumerate(alpha):
                    if a:
                        _add(rows, key, i * M + j, a * val)
        out.extend(r for r in rows.values() if r)
    return out, n * M


def form_blocks(n: int, p: int):
    return list(combinations(range(n), p))


def form_rows(A, p: int, d: int):
    """Constraint rows for eta = sum g_I dx_I, g_I of degree d + |m|.

    omega = eta / Q(A, m) lies in Omega^p(A, m) iff alpha_H^m(H) divides
    every coefficient of d alpha_H ^ eta.
    """
    n = A.dim
    N = d + A.size
    M = dim_homogeneous(n, N)
    blocks = form_blocks(n, p)
    bidx = {I: b for b, I in enumerate(blocks)}
    out = []
    if N < 0 or p == n:
        return out, len(blocks) * M
    targets = list(combinations(range(n), p + 1))
    for h in A.active:
        alpha = A.hyperplanes[h]
        table = divisibility_table(alpha, A.mult[h], N)
        for J in targets:
            terms = []
            for pos, j in enumerate(J):
                if alpha[j]:
                    I = J[:pos] + J[pos + 1:]
                    terms.append((bidx[I], (-1) ** pos * alpha[j]))
            if not terms:
                continue
            rows: dict = {}
            for jm, entries in enumerate(table):
                for key, val in entries:
                    for b, coef in terms:
                        _add(rows, key, b * M + jm, coef * val)
            out.extend(r for r in rows.values() if r)
    return out, len(blocks) * M


def divisible_rows(alpha: tuple, m: int, d: int, blocks: int, M: int):
    """Rows forcing every block (a degree-d polynomial) to be divisible by alpha^m."""
    table = divisibility_table(alpha, m, d)
    out = []
    for b in range(blocks):
        rows: dict = {}
        for j, entries in enumerate(table):
            for key, val in entries:
                _add(rows, key, b * M + j, val)
        out.extend(r for r in rows.values() if r)
    return out


def vector_to_polys(vec, n: int, d: int, blocks: int):
    M = dim_homogeneous(n, d)
    mons = monomials(n, d)
    polys = []
    for b in range(blocks):
        t = {mons[j]: vec[b * M + j] for j in range(M) if vec[b * M + j]}
        polys.append(MPoly(n, t))
    return polys


def polys_to_vector(polys, n: int, d: int):
    M = dim_homogeneous(n, d)
    idx = monomial_index(n, d)
    row = {}
    for b, f in enumerate(polys):
        for e, c in f.items():
            if sum(e) != d:
                raise ValueError(f"polynomial not homogeneous of degree {d}")
            row[b * M + idx[e]] = c
    return row
