"""Univariate (Laurent) polynomials and Laurent-in-x bivariate polynomials."""

from __future__ import annotations

from fractions import Fraction

from .rational import as_rat, norm, rat_str


class UPoly:
    """Laurent polynomial ``sum coeffs[i] * t**(low + i)``.

    With ``low == 0`` this is an ordinary polynomial, lowest degree first.
    Stored trimmed: no trailing zeros, and no leading zeros below the first
    nonzero coefficient (``low`` absorbs them).
    """

    __slots__ = ("coeffs", "low")

    def __init__(self, coeffs=(), low: int = 0):
        cs = [norm(as_rat(c)) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        start = 0
        while start < len(cs) and not cs[start]:
            start += 1
        self.coeffs = tuple(cs[start:])
        self.low = low + start if self.coeffs else 0

    @classmethod
    def from_dict(cls, d):
        d = {k: v for k, v in d.items() if v}
        if not d:
            return cls()
        lo, hi = min(d), max(d)
        return cls([d.get(k, 0) for k in range(lo, hi + 1)], lo)

    @classmethod
    def from_roots(cls, roots):
        p = cls([1])
        for r in roots:
            p = p * cls([-as_rat(r), 1])
        return p

    @classmethod
    def monomial(cls, k, c=1):
        return cls([c], k)

    def as_dict(self):
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return self.low + len(self.coeffs) - 1 if self.coeffs else -1

    def valuation(self):
        return self.low if self.coeffs else None

    def coeff(self, k):
        i = k - self.low
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_polynomial(self):
        return self.low >= 0

    def poly_coeffs(self):
        """Coefficient list lowest-first starting at t^0 (requires low >= 0)."""
        if self.low < 0:
            raise ValueError("Laurent polynomial has negative powers")
        return [0] * self.low + list(self.coeffs)

    def leading_coeff(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.low == other.low and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UPoly([other])
        return NotImplemented

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def _c(self, o):
        if isinstance(o, UPoly):
            return o
        if isinstance(o, (int, Fraction)):
            return UPoly([o])
        return None

    def __add__(self, other):
        o = self._c(other)
        if o is None:
            return NotImplemented
        d = self.as_dict()
        for k, v in o.as_dict().items():
            d[k] = d.get(k, 0) + v
        return UPoly.from_dict(d)

    __radd__ = __add__

    def __neg__(self):
        return UPoly([-c for c in self.coeffs], self.low)

    def __sub__(self, other):
        o = self._c(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._c(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UPoly()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return UPoly(out, self.low + o.low)

    __rmul__ = __mul__

    def __pow__(self, k):
        r = UPoly([1])
        for _ in range(k):
            r = r * self
        return r

    def __call__(self, t):
        total = 0
        for i, c in enumerate(self.coeffs):
            total += c * as_rat(t) ** (self.low + i)
        return norm(as_rat(total))

    def compose(self, inner: "UPoly"):
        if self.low < 0:
            raise ValueError("cannot compose a Laurent polynomial")
        result = UPoly()
        for c in reversed(self.poly_coeffs()):
            result = result * inner + c
        return result

    def divmod(self, d: "UPoly"):
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        a = self.poly_coeffs()
        b = d.poly_coeffs()
        q = [0] * max(len(a) - len(b) + 1, 0)
        a = [as_rat(x) for x in a]
        lb = as_rat(b[-1])
        for i in range(len(a) - len(b), -1, -1):
            c = a[i + len(b) - 1] / lb
            q[i] = c
            if c:
                for j, bj in enumerate(b):
                    a[i + j] -= c * bj
        return UPoly(q), UPoly(a[: len(b) - 1])

    def derivative(self):
        return UPoly([(self.low + i) * c for i, c in enumerate(self.coeffs)], self.low - 1) if self.coeffs else UPoly()

    def int_coeffs(self):
        cs = self.poly_coeffs()
        if any(as_rat(c).denominator != 1 for c in cs):
            raise ValueError("non-integer coefficients")
        return [int(c) for c in cs]

    def to_str(self, var="t"):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.as_dict(), reverse=True):
            c = as_rat(self.coeff(k))
            a = abs(c)
            if k == 0:
                mono = ""
            elif k == 1:
                mono = var
            else:
                mono = f"{var}^{k}"
            body = (rat_str(a) if (a != 1 or not mono) else "") + mono
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"UPoly({self.to_str()!r})"


class BiPoly:
    """Polynomial in (x, y), Laurent in x: ``{(i, j): c}`` for ``c x^i y^j``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for k, c in (terms or {}).items():
            c = norm(as_rat(c))
            if c:
                self.terms[(int(k[0]), int(k[1]))] = c

    def __add__(self, other):
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return BiPoly(t)

    def __mul__(self, other):
        t = {}
        for (a, b), c in self.terms.items():
            for (p, q), d in other.terms.items():
                k = (a + p, b + q)
                t[k] = t.get(k, 0) + c * d
        return BiPoly(t)

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def y_coefficient(self, j) -> UPoly:
        return UPoly.from_dict({i: c for (i, jj), c in self.terms.items() if jj == j})

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        return f"BiPoly({self.sorted_terms()})"
