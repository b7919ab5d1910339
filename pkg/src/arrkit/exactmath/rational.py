"""Rational scalars.

Rationals are plain :class:`fractions.Fraction` values.  Integral values are
kept as ``int`` inside polynomials for speed; :func:`norm` does that folding.
"""

from fractions import Fraction
from math import gcd

Rat = Fraction


def norm(c):
    """Fold a Fraction with unit denominator back to an int."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def as_rat(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return parse_rat(c)
    raise TypeError(f"not an exact rational: {c!r}")


def rat_str(c) -> str:
    """Serialize as ``"p/q"``, omitting ``/q`` when q == 1."""
    c = as_rat(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def parse_rat(s: str) -> Fraction:
    s = s.strip()
    if not s:
        raise ValueError("empty rational")
    if "." in s or "e" in s.lower():
        raise ValueError(f"non-exact rational literal {s!r}")
    return Fraction(s)


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b if a and b else 0


def content(values) -> int:
    """gcd of a collection of integers (0 for an empty/zero collection)."""
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            break
    return g
