"""Sparse multivariate polynomials with rational coefficients."""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

from .rational import as_rat, norm, rat_str


def grlex_key(e):
    return (sum(e), e)


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple:
    """Exponent vectors of the given total degree, in descending graded-lex order."""
    if degree < 0:
        return ()
    if nvars == 0:
        return ((),) if degree == 0 else ()
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, degree: int) -> dict:
    return {e: i for i, e in enumerate(monomials(nvars, degree))}


def dim_homogeneous(nvars: int, degree: int) -> int:
    """dim of the degree-``degree`` part of a polynomial ring in ``nvars`` variables."""
    if degree < 0:
        return 0
    if nvars == 0:
        return 1 if degree == 0 else 0
    return comb(degree + nvars - 1, nvars - 1)


class MPoly:
    """Immutable polynomial in ``nvars`` variables.

    ``terms`` maps exponent tuples to nonzero coefficients (int or Fraction).
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms=None, *, _clean=False):
        self.nvars = nvars
        self._hash = None
        if terms is None:
            self._terms = {}
        elif _clean:
            self._terms = terms
        else:
            clean = {}
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars or any(k < 0 for k in e):
                    raise ValueError(f"bad exponent {e} for {nvars} variables")
                c = norm(as_rat(c)) if not isinstance(c, int) else c
                if c:
                    clean[e] = c
            self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {}, _clean=True)

    @classmethod
    def const(cls, c, nvars):
        c = norm(as_rat(c))
        return cls(nvars, {(0,) * nvars: c} if c else {}, _clean=True)

    @classmethod
    def var(cls, i, nvars):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, _clean=True)

    @classmethod
    def linear(cls, coeffs):
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            c = norm(as_rat(c))
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return cls(n, terms, _clean=True)

    @classmethod
    def monomial(cls, e, c=1):
        c = norm(as_rat(c))
        return cls(len(e), {tuple(e): c} if c else {}, _clean=True)

    # -- basic protocol ----------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, e):
        return self._terms.get(tuple(e), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._terms
            return self._terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch {self.nvars} != {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other, self.nvars)
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._terms:
            return self
        t = dict(self._terms)
        for e, c in o._terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = norm(v)
            else:
                t.pop(e, None)
        return MPoly(self.nvars, t, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {e: -c for e, c in self._terms.items()}, _clean=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c):
        c = norm(as_rat(c))
        if not c:
            return MPoly.zero(self.nvars)
        return MPoly(self.nvars, {e: norm(v * c) for e, v in self._terms.items()}, _clean=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._terms, o._terms
        if len(a) < len(b):
            a, b = b, a
        t = {}
        get = t.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple([x + y for x, y in zip(e1, e2)])
                t[e] = get(e, 0) + c1 * c2
        return MPoly(self.nvars, {e: norm(c) for e, c in t.items() if c}, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, e, c=1):
        return MPoly(
            self.nvars,
            {tuple(x + y for x, y in zip(k, e)): norm(v * c) for k, v in self._terms.items()},
            _clean=True,
        )

    # -- structure ---------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def constant_value(self):
        return self._terms.get((0,) * self.nvars, 0)

    def is_homogeneous(self):
        return len({sum(e) for e in self._terms}) <= 1

    def homogeneous_part(self, d):
        return MPoly(self.nvars, {e: c for e, c in self._terms.items() if sum(e) == d}, _clean=True)

    def homogeneous_parts(self):
        parts = {}
        for e, c in self._terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: MPoly(self.nvars, t, _clean=True) for d, t in sorted(parts.items())}

    def leading_term(self):
        e = max(self._terms, key=grlex_key)
        return e, self._terms[e]

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def coefficients_in(self, degree):
        """Coefficients on the degree-``degree`` monomial basis (zero elsewhere)."""
        return [self._terms.get(e, 0) for e in monomials(self.nvars, degree)]

    @classmethod
    def from_coefficients(cls, nvars, degree, vec):
        mons = monomials(nvars, degree)
        return cls(nvars, {mons[i]: c for i, c in enumerate(vec) if c})

    # -- calculus / substitution ------------------------------------------

    def diff(self, i):
        t = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                f = list(e)
                f[i] = k - 1
                t[tuple(f)] = c * k
        return MPoly(self.nvars, t, _clean=True)

    def compose(self, images):
        """Substitute variable i by ``images[i]`` (all MPolys in a common ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        if not self._terms:
            return MPoly.zero(images[0].nvars if images else 0)
        m = images[0].nvars if images else 0
        powers = [dict() for _ in range(self.nvars)]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                if k == 0:
                    cache[k] = MPoly.const(1, m)
                elif k == 1:
                    cache[k] = images[i]
                else:
                    cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        acc = {}
        for e, c in self._terms.items():
            term = MPoly.const(c, m)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            for f, v in term._terms.items():
                acc[f] = acc.get(f, 0) + v
        return MPoly(m, {e: norm(c) for e, c in acc.items() if c}, _clean=True)

    def evaluate(self, point):
        total = 0
        for e, c in self._terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            total += v
        return norm(as_rat(total)) if isinstance(total, (int, Fraction)) else total

    def extend(self, nvars, positions=None):
        """Embed into a ring with more variables (old var i -> positions[i])."""
        if positions is None:
            positions = list(range(self.nvars))
        t = {}
        for e, c in self._terms.items():
            f = [0] * nvars
            for i, k in enumerate(e):
                f[positions[i]] = k
            t[tuple(f)] = c
        return MPoly(nvars, t, _clean=True)

    # -- division ------------------------------------------------------------

    def divmod(self, d: "MPoly"):
        """Graded-lex division by a single polynomial: self = q*d + r.

        No term of r is divisible by the leading monomial of d, so r == 0
        exactly when d divides self.
        """
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if d.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        le, lc = d.leading_term()
        lc = as_rat(lc)
        rest = [(e, c) for e, c in d._terms.items() if e != le]
        p = dict(self._terms)
        heap = [(-sum(e), tuple(-k for k in e), e) for e in p]
        heapq.heapify(heap)
        q, r = {}, {}
        while heap:
            _, _, e = heapq.heappop(heap)
            c = p.pop(e, 0)
            if not c:
                continue
            # skip stale duplicates
            while heap and heap[0][2] == e:
                heapq.heappop(heap)
            if all(x >= y for x, y in zip(e, le)):
                s = tuple(x - y for x, y in zip(e, le))
                qc = norm(as_rat(c) / lc)
                q[s] = norm(q.get(s, 0) + qc)
                for f, fc in rest:
                    g = tuple(x + y for x, y in zip(s, f))
                    had = g in p
                    v = p.get(g, 0) - qc * fc
                    if v:
                        p[g] = norm(v)
                        if not had:
                            heapq.heappush(heap, (-sum(g), tuple(-k for k in g), g))
                    else:
                        p.pop(g, None)
            else:
                r[e] = c
        return (
            MPoly(self.nvars, {e: c for e, c in q.items() if c}, _clean=True),
            MPoly(self.nvars, r, _clean=True),
        )

    def exact_div(self, d: "MPoly"):
        q, r = self.divmod(d)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    # -- printing ------------------------------------------------------------

    def to_str(self, names=None):
        if not self._terms:
            return "0"
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            c = as_rat(c)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono:
                body = mono if a == 1 else f"{rat_str(a)}*{mono}"
            else:
                body = rat_str(a)
            pieces.append((sign, body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MPoly({self.nvars}, {self.to_str()!r})"


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_mpoly(text: str, nvars: int, names=None) -> MPoly:
    """Parse the ``to_str`` format back (``3/2*x1^2*x3 - x2 + 1``)."""
    if names is None:
        names = [f"x{i + 1}" for i in range(nvars)]
    lookup = {n: i for i, n in enumerate(names)}
    text = text.strip()
    if text == "0":
        return MPoly.zero(nvars)
    terms = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        c = Fraction(sign)
        e = [0] * nvars
        for factor in m.group(2).strip().split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if factor[0].isdigit():
                c *= Fraction(factor)
                continue
            name, _, k = factor.partition("^")
            if name not in lookup:
                raise ValueError(f"unknown variable {name!r}")
            e[lookup[name]] += int(k) if k else 1
        e = tuple(e)
        terms[e] = terms.get(e, 0) + c
    return MPoly(nvars, terms)
