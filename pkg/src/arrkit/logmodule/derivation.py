"""Polynomial vector fields and rational differential forms."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..exactmath import MPoly, mpoly_divides


class MembershipError(ValueError):
    """A candidate is not in the module it was claimed to lie in."""


@dataclass(frozen=True)
class Derivation:
    """delta = sum coeffs[i] * d/dx_i."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a derivation needs at least one coordinate")

    @classmethod
    def zero(cls, n):
        return cls([MPoly.zero(n)] * n)

    @property
    def nvars(self):
        return len(self.coeffs)

    @property
    def degree(self) -> int:
        """Common degree of the coefficients (-1 for zero)."""
        degs = {c.degree() for c in self.coeffs if c}
        if not degs:
            return -1
        if len(degs) > 1 or not all(c.is_homogeneous() for c in self.coeffs if c):
            raise ValueError("derivation is not homogeneous")
        return degs.pop()

    def is_zero(self):
        return not any(self.coeffs)

    def __call__(self, f: MPoly) -> MPoly:
        out = MPoly.zero(self.nvars)
        for i, c in enumerate(self.coeffs):
            if c:
                out = out + c * f.diff(i)
        return out

    def apply_linear(self, covector) -> MPoly:
        out = MPoly.zero(self.nvars)
        for a, c in zip(covector, self.coeffs):
            if a:
                out = out + c.scale(a)
        return out

    def __add__(self, o):
        return Derivation([a + b for a, b in zip(self.coeffs, o.coeffs)])

    def __sub__(self, o):
        return Derivation([a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __neg__(self):
        return Derivation([-a for a in self.coeffs])

    def scale(self, c):
        return Derivation([a.scale(c) for a in self.coeffs])

    def mul(self, f: MPoly):
        return Derivation([a * f for a in self.coeffs])

    def is_member(self, A, mult=None) -> bool:
        mult = A.mult if mult is None else mult
        for h, k in enumerate(mult):
            if k <= 0:
                continue
            g = self.apply_linear(A.hyperplanes[h])
            if g and not mpoly_divides(A.alpha(h) ** k, g)[0]:
                return False
        return True

    def to_strs(self, names=None):
        return [c.to_str(names) for c in self.coeffs]

    def __str__(self):
        n = self.nvars
        parts = [f"({c.to_str()})*d{i + 1}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) if parts else f"0 (in {n} vars)"


def euler(n: int) -> Derivation:
    return Derivation([MPoly.var(i, n) for i in range(n)])


def delta_p(n: int, p: int) -> Derivation:
    """sum x_i^p d_i."""
    return Derivation([MPoly.var(i, n) ** p for i in range(n)])


def partial(n: int, i: int) -> Derivation:
    return Derivation([MPoly.const(1 if j == i else 0, n) for j in range(n)])


@dataclass(frozen=True)
class LogForm:
    """omega = (sum_I numerators[I] dx_I) / prod alpha_H^denominators[H].

    ``denominators`` pairs each covector with its exponent.  Degree
    convention: dx has degree 0, so deg omega = deg numerator - deg denominator.
    """

    p: int
    nvars: int
    numerators: dict
    denominators: tuple = ()

    def denominator(self) -> MPoly:
        q = MPoly.const(1, self.nvars)
        for cov, k in self.denominators:
            q = q * MPoly.linear(cov) ** k
        return q

    @property
    def degree(self) -> int:
        degs = {f.degree() for f in self.numerators.values() if f}
        if not degs:
            return -10**9
        if len(degs) > 1:
            raise ValueError("form is not homogeneous")
        return degs.pop() - sum(k for _, k in self.denominators)

    def is_zero(self):
        return not any(self.numerators.values())

    def over(self, A, mult=None):
        """Numerator eta with omega = eta / Q(A, m), or None if the poles do not fit."""
        mult = A.mult if mult is None else mult
        have = {}
        for cov, k in self.denominators:
            try:
                h = A.index_of(cov)
            except ValueError:
                return None
            have[h] = have.get(h, 0) + k
        mult_full = {h: k for h, k in enumerate(mult) if k}
        factor = MPoly.const(1, self.nvars)
        for h, k in have.items():
            if k > mult_full.get(h, 0):
                return None
        for h, k in mult_full.items():
            extra = k - have.get(h, 0)
            if extra:
                factor = factor * A.alpha(h) ** extra
        return {I: f * factor for I, f in self.numerators.items()}

    def is_member(self, A, mult=None) -> bool:
        mult = A.mult if mult is None else mult
        eta = self.over(A, mult)
        if eta is None:
            return False
        n = self.nvars
        for h, k in enumerate(mult):
            if k <= 0:
                continue
            a = A.hyperplanes[h]
            ak = A.alpha(h) ** k
            for J in combinations(range(n), self.p + 1):
                c = MPoly.zero(n)
                for pos, j in enumerate(J):
                    if a[j]:
                        I = J[:pos] + J[pos + 1:]
                        g = eta.get(I)
                        if g:
                            c = c + g.scale((-1) ** pos * a[j])
                if c and not mpoly_divides(ak, c)[0]:
                    return False
        return True

    def __str__(self):
        parts = []
        for I in sorted(self.numerators):
            f = self.numerators[I]
            if f:
                dx = "^".join(f"dx{i + 1}" for i in I) or "1"
                parts.append(f"({f.to_str()})*{dx}")
        num = " + ".join(parts) or "0"
        den = "*".join(f"({MPoly.linear(c).to_str()})^{k}" for c, k in self.denominators if k)
        return f"[{num}] / [{den or '1'}]"
