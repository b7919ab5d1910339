"""Multiarrangements of linear hyperplanes given by integer covectors."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd

from .exactmath import MPoly, RatMatrix


class ArrangementError(ValueError):
    pass


def canonical_covector(coords) -> tuple:
    """Primitive integer vector whose first nonzero entry is positive."""
    vals = [Fraction(c) for c in coords]
    if not any(vals):
        raise ArrangementError("zero covector does not define a hyperplane")
    den = reduce(lambda a, b: a * b // gcd(a, b), (v.denominator for v in vals), 1)
    ints = [int(v * den) for v in vals]
    g = reduce(gcd, (abs(v) for v in ints))
    ints = [v // g for v in ints]
    first = next(v for v in ints if v)
    if first < 0:
        ints = [-v for v in ints]
    return tuple(ints)


@dataclass(frozen=True)
class Multiarrangement:
    dim: int
    hyperplanes: tuple
    mult: tuple

    def __post_init__(self):
        if len(self.hyperplanes) != len(self.mult):
            raise ArrangementError("one multiplicity per hyperplane")

    # -- derived data ------------------------------------------------------

    def __len__(self):
        return len(self.hyperplanes)

    @property
    def size(self) -> int:
        """|m|, the total multiplicity."""
        return sum(self.mult)

    @property
    def active(self) -> list:
        """Indices with positive multiplicity."""
        return [i for i, k in enumerate(self.mult) if k > 0]

    @property
    def is_simple(self) -> bool:
        return all(k == 1 for k in self.mult)

    @property
    def rank(self) -> int:
        rows = [self.hyperplanes[i] for i in self.active]
        if not rows:
            return 0
        return RatMatrix(rows, self.dim).rank()

    @property
    def is_essential(self) -> bool:
        return self.rank == self.dim

    def alpha(self, i) -> MPoly:
        return MPoly.linear(self.hyperplanes[i])

    def defining_polynomial(self) -> MPoly:
        """Q(A, m) = prod alpha_H^m(H)."""
        q = MPoly.const(1, self.dim)
        for i, k in enumerate(self.mult):
            if k:
                q = q * self.alpha(i) ** k
        return q

    def index_of(self, covector) -> int:
        c = canonical_covector(covector)
        try:
            return self.hyperplanes.index(c)
        except ValueError:
            raise ArrangementError(f"{c} is not a hyperplane of this arrangement") from None

    def with_mult(self, mult) -> "Multiarrangement":
        if isinstance(mult, int):
            mult = (mult,) * len(self.hyperplanes)
        mult = tuple(int(k) for k in mult)
        if len(mult) != len(self.hyperplanes) or any(k < 0 for k in mult):
            raise ArrangementError("bad multiplicity vector")
        return Multiarrangement(self.dim, self.hyperplanes, mult)

    def simple(self) -> "Multiarrangement":
        """Underlying simple arrangement of the active hyperplanes."""
        hs = tuple(self.hyperplanes[i] for i in self.active)
        return Multiarrangement(self.dim, hs, (1,) * len(hs))

    def nonzero(self) -> "Multiarrangement":
        """Drop multiplicity-0 hyperplanes."""
        idx = self.active
        return Multiarrangement(
            self.dim, tuple(self.hyperplanes[i] for i in idx), tuple(self.mult[i] for i in idx)
        )

    def __str__(self):
        return to_arr(self)


def make(dim: int, covectors, mult=None) -> Multiarrangement:
    """Canonicalize covectors; duplicates merge by summing multiplicities."""
    covectors = list(covectors)
    if mult is None:
        mult = [1] * len(covectors)
    mult = list(mult)
    if len(mult) != len(covectors):
        raise ArrangementError("one multiplicity per covector")
    hs: list = []
    ms: list = []
    for c, k in zip(covectors, mult):
        if len(c) != dim:
            raise ArrangementError(f"covector {tuple(c)} has wrong length for dim {dim}")
        if int(k) != k or k < 0:
            raise ArrangementError(f"negative or non-integer multiplicity {k}")
        cc = canonical_covector(c)
        if cc in hs:
            ms[hs.index(cc)] += int(k)
        else:
            hs.append(cc)
            ms.append(int(k))
    return Multiarrangement(dim, tuple(hs), tuple(ms))


# -- named arrangements ------------------------------------------------------


def _root(n, i, j, extra=()):
    v = [0] * n
    v[i], v[j] = 1, -1
    return tuple(v) + tuple(extra)


def braid(n: int) -> Multiarrangement:
    """x_i - x_j = 0 in C^n."""
    if n < 2:
        raise ArrangementError("braid arrangement needs n >= 2")
    return make(n, [_root(n, i, j) for i, j in combinations(range(n), 2)])


def boolean(ell: int) -> Multiarrangement:
    if ell < 1:
        raise ArrangementError("boolean arrangement needs dimension >= 1")
    return make(ell, [tuple(int(i == j) for j in range(ell)) for i in range(ell)])


def catalan(n: int) -> Multiarrangement:
    """Cone of the Catalan arrangement in coordinates (x_1..x_n, z); z first."""
    if n < 2:
        raise ArrangementError("Catalan arrangement needs n >= 2")
    z = tuple([0] * n + [1])
    covs = [z]
    for i, j in combinations(range(n), 2):
        covs.append(_root(n, i, j, (0,)))
        covs.append(_root(n, i, j, (-1,)))
        covs.append(_root(n, i, j, (1,)))
    return make(n + 1, covs)


# Deconed at H_0 = {x1 = 0}: a pencil of five lines through the origin
# (x2 = 0 and x3 = +-x2, +-2 x2) and the transversal H_1: x3 = 1.
STANLEY_COVECTORS = (
    (1, 0, 0),    # H_0, line at infinity
    (1, 0, -1),   # H_1
    (0, 1, -1),   # H_2
    (0, 2, -1),   # H_3
    (0, 1, 0),    # H_4
    (0, 2, 1),    # H_5
    (0, 1, 1),    # H_6
)
STANLEY_K = (0, 0, 1)  # x3 = 0: through the pencil point, parallel to H_1


def stanley() -> Multiarrangement:
    return make(3, STANLEY_COVECTORS)


def stanley_extended() -> Multiarrangement:
    return make(3, STANLEY_COVECTORS + (STANLEY_K,))


def generic(dim: int, count: int, seed: int = 0) -> Multiarrangement:
    """Deterministic pseudo-random simple arrangement (for property tests)."""
    import random

    rng = random.Random(seed)
    seen = set()
    covs = []
    while len(covs) < count:
        c = tuple(rng.randint(-3, 3) for _ in range(dim))
        if not any(c):
            continue
        cc = canonical_covector(c)
        if cc not in seen:
            seen.add(cc)
            covs.append(cc)
    return make(dim, covs)


# -- coordinates on a hyperplane ---------------------------------------------


@dataclass(frozen=True)
class HyperplaneChart:
    """Coordinates on H = {alpha = 0}: drop coordinate ``k`` (lowest nonzero)."""

    alpha: tuple
    k: int

    @classmethod
    def of(cls, alpha):
        k = next(i for i, a in enumerate(alpha) if a)
        return cls(tuple(alpha), k)

    @property
    def dim(self):
        return len(self.alpha)

    @property
    def kept(self):
        return [j for j in range(self.dim) if j != self.k]

    def restrict_covector(self, beta):
        """beta restricted to H, in the kept coordinates (rational, unscaled)."""
        a, k = self.alpha, self.k
        return tuple(Fraction(beta[j]) - Fraction(beta[k] * a[j], a[k]) for j in self.kept)

    def restriction_images(self):
        """x_j as polynomials on H (in ``dim - 1`` variables)."""
        n = self.dim - 1
        a, k = self.alpha, self.k
        images = []
        pos = 0
        for j in range(self.dim):
            if j == k:
                images.append(MPoly.linear([Fraction(-a[i], a[k]) for i in self.kept]))
            else:
                images.append(MPoly.var(pos, n))
                pos += 1
        return images

    def adapted_images(self):
        """x_j in terms of y where y_k = alpha and y_j = x_j otherwise."""
        n = self.dim
        a, k = self.alpha, self.k
        images = []
        for j in range(n):
            if j == k:
                coeffs = [Fraction(-a[i], a[k]) if i != k else Fraction(1, a[k]) for i in range(n)]
                images.append(MPoly.linear(coeffs))
            else:
                images.append(MPoly.var(j, n))
        return images


@dataclass(frozen=True)
class RestrictionResult:
    ambient: Multiarrangement
    origin_map: tuple  # restricted hyperplane index -> tuple of original indices
    chart: HyperplaneChart
    hyperplane: int


def restrict(A: Multiarrangement, h: int, use_mult=False) -> RestrictionResult:
    """Restriction to the h-th hyperplane, in chart coordinates.

    Multiplicity of X counts the hyperplanes H' with H' cut out X (Ziegler's
    m^H).  With ``use_mult`` each H' contributes m(H') instead of 1.
    """
    if not 0 <= h < len(A):
        raise ArrangementError(f"hyperplane index {h} out of range")
    if A.dim < 2:
        raise ArrangementError("restriction needs dim >= 2")
    chart = HyperplaneChart.of(A.hyperplanes[h])
    covs, mult, origin = [], [], []
    for i in A.active:
        if i == h:
            continue
        beta = chart.restrict_covector(A.hyperplanes[i])
        c = canonical_covector(beta)
        w = A.mult[i] if use_mult else 1
        if c in covs:
            j = covs.index(c)
            mult[j] += w
            origin[j].append(i)
        else:
            covs.append(c)
            mult.append(w)
            origin.append([i])
    amb = Multiarrangement(A.dim - 1, tuple(covs), tuple(mult))
    return RestrictionResult(amb, tuple(tuple(o) for o in origin), chart, h)


def ziegler_restrict(A: Multiarrangement, h: int) -> RestrictionResult:
    if not A.is_simple:
        raise ArrangementError("Ziegler restriction is defined for simple arrangements")
    return restrict(A, h)


def localize(A: Multiarrangement, flat) -> Multiarrangement:
    """Hyperplanes containing the flat (given as a lattice Flat or index set)."""
    idx = getattr(flat, "contains", flat)
    idx = set(idx)
    if not idx or any(not 0 <= i < len(A) for i in idx):
        raise ArrangementError("invalid flat")
    # closure: every hyperplane whose covector is in the span
    rows = [A.hyperplanes[i] for i in idx]
    r = RatMatrix(rows, A.dim).rank()
    keep = [i for i in range(len(A)) if A.mult[i] > 0 and
            (i in idx or RatMatrix(rows + [A.hyperplanes[i]], A.dim).rank() == r)]
    return Multiarrangement(A.dim, tuple(A.hyperplanes[i] for i in keep), tuple(A.mult[i] for i in keep))


def delete(A: Multiarrangement, h: int) -> Multiarrangement:
    """Decrement m(H); the hyperplane disappears when it reaches 0."""
    if not 0 <= h < len(A) or A.mult[h] == 0:
        raise ArrangementError("cannot delete a hyperplane of multiplicity 0")
    mult = list(A.mult)
    mult[h] -= 1
    if mult[h] == 0:
        return Multiarrangement(
            A.dim, A.hyperplanes[:h] + A.hyperplanes[h + 1:], tuple(mult[:h] + mult[h + 1:])
        )
    return Multiarrangement(A.dim, A.hyperplanes, tuple(mult))


def add(A: Multiarrangement, covector, k: int = 1) -> Multiarrangement:
    return make(A.dim, list(A.hyperplanes) + [covector], list(A.mult) + [k])


@dataclass(frozen=True)
class AffineLine:
    """a . u + b = 0 in the deconed affine chart."""

    normal: tuple
    offset: Fraction
    source: int


@dataclass(frozen=True)
class Deconing:
    chart: HyperplaneChart
    lines: tuple
    hyperplane: int


def decone(A: Multiarrangement, h: int) -> Deconing:
    """Affine arrangement on the chart alpha_h = 1 (kept coordinates x_j, j != k)."""
    chart = HyperplaneChart.of(A.hyperplanes[h])
    a, k = chart.alpha, chart.k
    lines = []
    for i in A.active:
        if i == h:
            continue
        beta = A.hyperplanes[i]
        normal = chart.restrict_covector(beta)
        offset = Fraction(beta[k], a[k])
        lines.append(AffineLine(normal, offset, i))
    return Deconing(chart, tuple(lines), h)


def essentialize(A: Multiarrangement):
    """(essential arrangement in rank-many coordinates, pivot columns).

    Covectors are projected onto the pivot columns of the row-reduced
    covector matrix, which is a linear isomorphism of their span.
    """
    rows = [A.hyperplanes[i] for i in A.active]
    if not rows:
        return Multiarrangement(0, (), ()), []
    _, piv, r = RatMatrix(rows, A.dim).rref()
    covs = [tuple(A.hyperplanes[i][p] for p in piv) for i in A.active]
    E = make(r, covs, [A.mult[i] for i in A.active])
    return E, piv


# -- the .arr text format ----------------------------------------------------

_INT = re.compile(r"^[+-]?\d+$")


def parse_arr(text: str) -> Multiarrangement:
    dim = None
    covs, mults = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "dim":
            if len(parts) != 2 or not _INT.match(parts[1]) or int(parts[1]) < 1:
                raise ArrangementError(f"line {lineno}: malformed dim line")
            dim = int(parts[1])
        elif parts[0] == "H":
            if dim is None:
                raise ArrangementError(f"line {lineno}: hyperplane before dim")
            body = parts[1:]
            k = 1
            if body and body[-1].startswith("m="):
                ks = body.pop()[2:]
                if not _INT.match(ks):
                    raise ArrangementError(f"line {lineno}: bad multiplicity {ks!r}")
                k = int(ks)
            if len(body) != dim or not all(_INT.match(b) for b in body):
                raise ArrangementError(f"line {lineno}: expected {dim} integer coefficients")
            covs.append(tuple(int(b) for b in body))
            mults.append(k)
        else:
            raise ArrangementError(f"line {lineno}: unknown record {parts[0]!r}")
    if dim is None:
        raise ArrangementError("missing dim line")
    return make(dim, covs, mults)


def to_arr(A: Multiarrangement) -> str:
    lines = [f"dim {A.dim}"]
    for c, k in zip(A.hyperplanes, A.mult):
        tail = "" if k == 1 else f" m={k}"
        lines.append("H " + " ".join(str(v) for v in c) + tail)
    return "\n".join(lines) + "\n"


def read_arr(path) -> Multiarrangement:
    with open(path) as fh:
        return parse_arr(fh.read())
