"""Exact linear algebra over the rationals.

The workhorse is :class:`Echelon`, an incremental fraction-free row
echelon form over the integers with sparse rows.  Every degree-by-degree
module computation in the package reduces to feeding it constraint rows.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd

from .rational import as_rat, norm, lcm


def _integer_row(row: dict) -> dict:
    """Scale a sparse rational row to primitive integers with positive lead."""
    den = 1
    for v in row.values():
        if type(v) is not int:
            den = lcm(den, as_rat(v).denominator)
    if den != 1:
        row = {k: int(as_rat(v) * den) for k, v in row.items()}
    else:
        row = {k: v for k, v in row.items() if v}
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    return row


class Echelon:
    """Incremental echelon form of a growing set of rows.

    Rows are sparse ``{column: value}`` dicts.  ``add`` reduces an incoming
    row against the stored pivots until its leading column is new.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = _integer_row(row)
        heap = list(row)
        heapq.heapify(heap)
        pivots = self.pivots
        while heap:
            c = heapq.heappop(heap)
            v = row.get(c)
            if not v:
                continue
            prow = pivots.get(c)
            if prow is None:
                return row
            p = prow[c]
            g = gcd(p, v)
            a, b = p // g, v // g
            if a != 1:
                new = {k: a * x for k, x in row.items()}
            else:
                new = dict(row)
            for k, x in prow.items():
                y = new.get(k, 0) - b * x
                if y:
                    if k not in new:
                        heapq.heappush(heap, k)
                    new[k] = y
                else:
                    new.pop(k, None)
            g = 0
            for x in new.values():
                g = gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                new = {k: x // g for k, x in new.items()}
            row = new
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; True iff it increased the rank."""
        r = self.reduce(row)
        if not r:
            return False
        lead = min(r)
        if r[lead] < 0:
            r = {k: -x for k, x in r.items()}
        self.pivots[lead] = r
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    def rref_rows(self) -> dict:
        """Fully reduced rows keyed by pivot column, pivot entry 1 (Fractions)."""
        cols = sorted(self.pivots, reverse=True)
        done: dict[int, dict] = {}
        for c in cols:
            row = {k: Fraction(v) for k, v in self.pivots[c].items()}
            p = row[c]
            row = {k: v / p for k, v in row.items()}
            for k in [k for k in row if k != c and k in done]:
                f = row.get(k)
                if not f:
                    continue
                for kk, vv in done[k].items():
                    y = row.get(kk, 0) - f * vv
                    if y:
                        row[kk] = y
                    else:
                        row.pop(kk, None)
            done[c] = row
        return done

    def kernel(self) -> list:
        """Basis of the null space, one vector per free column (ascending)."""
        red = self.rref_rows()
        free = [c for c in range(self.ncols) if c not in red]
        # column -> list of (pivot, value) for back substitution
        bycol: dict[int, list] = {}
        for pc, row in red.items():
            for k, v in row.items():
                if k != pc:
                    bycol.setdefault(k, []).append((pc, v))
        basis = []
        for f in free:
            vec = [0] * self.ncols
            vec[f] = 1
            for pc, v in bycol.get(f, ()):
                vec[pc] = norm(-v)
            basis.append(vec)
        return basis


def nullspace(rows, ncols: int) -> list:
    e = Echelon(ncols)
    for r in rows:
        e.add(r)
    return e.kernel()


def sparse_rank(rows, ncols: int) -> int:
    e = Echelon(ncols)
    for r in rows:
        e.add(r)
    return e.rank


class RatMatrix:
    """Dense immutable rational matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        ent = tuple(tuple(norm(as_rat(x)) for x in r) for r in entries)
        self.rows = len(ent)
        if cols is None:
            cols = len(ent[0]) if ent else 0
        if any(len(r) != cols for r in ent):
            raise ValueError("ragged matrix")
        self.cols = cols
        self.entries = ent

    @classmethod
    def zeros(cls, r, c):
        return cls([[0] * c for _ in range(r)], c)

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.entries == other.entries and self.cols == other.cols

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            return RatMatrix(
                [[sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                  for j in range(other.cols)] for i in range(self.rows)],
                other.cols,
            )
        vec = list(other)
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        return [norm(as_rat(sum(a * b for a, b in zip(r, vec)))) for r in self.entries]

    def transpose(self):
        return RatMatrix([list(c) for c in zip(*self.entries)] if self.rows else [], self.rows)

    def _sparse(self):
        return [{j: v for j, v in enumerate(r) if v} for r in self.entries]

    def rref(self):
        """(reduced row echelon form, pivot columns, rank)."""
        e = Echelon(self.cols)
        for r in self._sparse():
            e.add(r)
        red = e.rref_rows()
        piv = sorted(red)
        out = [[red[p].get(j, 0) for j in range(self.cols)] for p in piv]
        out += [[0] * self.cols for _ in range(self.rows - len(piv))]
        return RatMatrix(out, self.cols), piv, len(piv)

    def rank(self):
        return sparse_rank(self._sparse(), self.cols)

    def kernel_basis(self):
        basis = nullspace(self._sparse(), self.cols)
        for v in basis:
            if any(x for x in self @ v):
                raise AssertionError("kernel vector failed verification")
        return basis

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return bareiss_det([[as_rat(x) for x in r] for r in self.entries])

    def __repr__(self):
        return f"RatMatrix({[list(r) for r in self.entries]})"


def bareiss_det(m, divide=None, zero=0, one=1):
    """Fraction-free determinant (Bareiss) over an integral domain.

    ``divide(a, b)`` must perform exact division; defaults to ``a / b``.
    """
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return one
    if divide is None:
        divide = lambda a, b: a / b  # noqa: E731
    a = [list(r) for r in m]
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k] == zero:
            for i in range(k + 1, n):
                if a[i][k] != zero:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = divide(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def det_poly(m):
    """Determinant of a square grid of MPoly entries."""
    from .mpoly import MPoly

    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        raise ValueError("empty matrix")
    nv = m[0][0].nvars
    return bareiss_det(
        m,
        divide=lambda a, b: a if b == 1 else a.exact_div(b),
        zero=MPoly.zero(nv),
        one=MPoly.const(1, nv),
    )
