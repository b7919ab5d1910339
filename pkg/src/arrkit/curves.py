"""Plane curves cut out by a free basis on a deconed rank-3 arrangement."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import HyperplaneChart, decone
from .exactmath import Echelon, MPoly, UPoly, bareiss_det, monomials, rat_str
from .lattice import char_poly, l2_points
from .logmodule import SaitoCertificate, SaitoError, euler, euler_decompose, saito_check


class CurveError(ArithmeticError):
    pass


@dataclass
class CurvePair:
    alpha: tuple
    c1: MPoly
    c2: MPoly
    degrees: tuple
    points: list  # (PlanarPoint, local multiplicity)
    basis: tuple = ()
    hyperplane: int = 0

    def to_json(self):
        return {
            "alpha": list(self.alpha),
            "c1": self.c1.to_str(["u", "v"]),
            "c2": self.c2.to_str(["u", "v"]),
            "degrees": list(self.degrees),
            "points": [{"p": [rat_str(c) for c in P.coords], "mu": P.mu, "mult": m,
                        "lines": list(P.lines)} for P, m in self.points],
            "bezout_sum": sum(m for _, m in self.points),
        }


def _candidate_alphas():
    for r in range(1, 6):
        for a, b in itertools.product(range(-r, r + 1), repeat=2):
            if max(abs(a), abs(b)) == r and (a > 0 or (a == 0 and b > 0)):
                yield (a, b)


def _parallel(alpha, normal):
    return alpha[0] * normal[1] - alpha[1] * normal[0] == 0


def choose_alpha(lines):
    for a in _candidate_alphas():
        if a != (0, 0) and not any(_parallel(a, L.normal) for L in lines):
            return a
    raise CurveError("no generic direction among small covectors")


def rebase(A, cert: SaitoCertificate, h0: int):
    """(delta_1, delta_2) with delta_i(alpha_H0) = 0, completing theta_E to a basis."""
    parts = []
    for b in cert.basis:
        _, d0 = euler_decompose(A, h0, b)
        if not d0.is_zero():
            parts.append(d0)
    parts.sort(key=lambda d: d.degree)
    theta = euler(A.dim)
    for a, b in itertools.combinations(parts, 2):
        try:
            saito_check(A, [theta, a, b])
        except SaitoError:
            continue
        return a, b
    raise CurveError("Euler complements do not complete theta_E to a basis")


def _restrict_to_chart(f: MPoly, chart: HyperplaneChart) -> MPoly:
    """f in adapted coordinates with alpha_H0 = 1, as a polynomial in the kept variables."""
    n = chart.dim
    imgs = chart.adapted_images()
    g = f.compose(imgs)
    # set y_k = 1 and drop it
    k = chart.k
    out = {}
    for e, c in g.items():
        e2 = e[:k] + e[k + 1:]
        out[e2] = out.get(e2, 0) + c
    return MPoly(n - 1, out)


def curve_pair(A, cert: SaitoCertificate = None, h0: int = 0, alpha=None) -> CurvePair:
    """c_i = delta_i(alpha) on the plane alpha_H0 = 1."""
    if A.dim != 3 or A.rank != 3 or not A.is_simple:
        raise CurveError("curve_pair needs a simple essential rank-3 arrangement")
    if cert is None:
        from .logmodule import freeness_test

        v = freeness_test(A)
        if not v.is_free:
            raise CurveError(f"arrangement is not free: {v.witness or v.reason}")
        cert = v.certificate
    try:
        again = saito_check(A, cert.basis)
    except SaitoError as exc:
        raise CurveError(f"invalid certificate: {exc}") from exc
    if again.exponents[0] != 1:
        raise CurveError("expected exponents (1, e1, e2)")
    dec = decone(A, h0)
    chart = dec.chart
    if alpha is None:
        alpha = choose_alpha(dec.lines)
    alpha = tuple(alpha)
    if any(_parallel(alpha, L.normal) for L in dec.lines):
        raise CurveError(f"alpha {alpha} is parallel to a deconed line")
    d1, d2 = rebase(A, cert, h0)
    cov = [0] * 3
    for a, j in zip(alpha, chart.kept):
        cov[j] = a
    cs = [_restrict_to_chart(d.apply_linear(cov), chart) for d in (d1, d2)]
    degs = (d1.degree, d2.degree)
    for c, e in zip(cs, degs):
        if c.degree() != e:
            raise CurveError(f"curve has degree {c.degree()} instead of {e}")
    pts = l2_points(A, h0)
    N = degs[0] * degs[1] + 1
    points = [(P, local_mult(cs[0], cs[1], P.coords, N)) for P in pts]
    return CurvePair(alpha, cs[0], cs[1], degs, points, (d1, d2), h0)


# -- local intersection multiplicity ---------------------------------------------------


def _shift(f: MPoly, p) -> MPoly:
    n = f.nvars
    imgs = [MPoly.var(i, n) + MPoly.const(p[i], n) for i in range(n)]
    return f.compose(imgs)


def _jet_corank(gens, N: int) -> int:
    """dim C[u,v]/(I + m^N) for the ideal generated by ``gens`` (already at the origin)."""
    n = 2
    cols = {}
    for d in range(N):
        for e in monomials(n, d):
            cols[e] = len(cols)
    ech = Echelon(len(cols))
    for g in gens:
        for d in range(N):
            for beta in monomials(n, d):
                row = {}
                for e, c in g.items():
                    t = (e[0] + beta[0], e[1] + beta[1])
                    if sum(t) < N:
                        row[cols[t]] = c
                if row:
                    ech.add(row)
    return len(cols) - ech.rank


def local_mult(c1: MPoly, c2: MPoly, p, N: int = None) -> int:
    """dim of the local ring C[[u,v]]/(c1, c2) at p, from truncated jets."""
    g1, g2 = _shift(c1, p), _shift(c2, p)
    if N is None:
        N = max(c1.degree(), 1) * max(c2.degree(), 1) + 1
    if g1.coeff((0, 0)) or g2.coeff((0, 0)):
        return 0
    a = _jet_corank([g1, g2], N - 1)
    b = _jet_corank([g1, g2], N)
    if a != b:
        raise CurveError(f"local quotient did not stabilize by order {N} (common component?)")
    return b


# -- Bezout accounting -----------------------------------------------------------------


def _as_v_poly(f: MPoly):
    """f(u, v) as a list (lowest v-power first) of UPoly coefficients in u."""
    by = {}
    for (i, j), c in f.items():
        by.setdefault(j, {})[i] = c
    deg = max(by) if by else 0
    return [UPoly.from_dict(by.get(j, {})) for j in range(deg + 1)]


def resultant_v(f: MPoly, g: MPoly) -> UPoly:
    """Res_v(f, g) by the Sylvester determinant over Q[u]."""
    F, G = _as_v_poly(f), _as_v_poly(g)
    m, n = len(F) - 1, len(G) - 1
    size = m + n
    if size == 0:
        return UPoly([1])
    rows = []
    for i in range(n):
        row = [UPoly()] * size
        for j, c in enumerate(reversed(F)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [UPoly()] * size
        for j, c in enumerate(reversed(G)):
            row[i + j] = c
        rows.append(row)

    def exact(a, b):
        q, r = a.divmod(b)
        if not r.is_zero():
            raise ArithmeticError("inexact division in Bareiss")
        return q

    return bareiss_det(rows, divide=exact, zero=UPoly(), one=UPoly([1]))


def _shear(f: MPoly, s) -> MPoly:
    """f(u' - s v, v)."""
    return f.compose([MPoly.linear([1, -s]), MPoly.var(1, 2)])


def _root_mult(R: UPoly, u0) -> int:
    k = 0
    lin = UPoly([-Fraction(u0), 1])
    while not R.is_zero() and R(u0) == 0:
        R, _ = R.divmod(lin)
        k += 1
    return k


@dataclass
class BezoutReport:
    degree_product: int
    resultant_degree: int
    at_infinity: int
    rows: list
    extra_affine: int
    shear: object
    ok: bool

    def to_json(self):
        return {"degree_product": self.degree_product, "resultant_degree": self.resultant_degree,
                "at_infinity": self.at_infinity, "extra_affine": self.extra_affine,
                "shear": rat_str(self.shear),
                "points": self.rows, "bezout_sum": sum(r["mult"] for r in self.rows), "ok": self.ok}


def bezout_report(pair: CurvePair) -> BezoutReport:
    e1, e2 = pair.c1.degree(), pair.c2.degree()
    pts = [P for P, _ in pair.points]
    for s in itertools.chain([0], *([k, -k] for k in range(1, 20))):
        f, g = _shear(pair.c1, s), _shear(pair.c2, s)
        lead_ok = all(_as_v_poly(h)[-1].degree() == 0 and len(_as_v_poly(h)) == h.degree() + 1
                      for h in (f, g))
        us = [P.coords[0] + s * P.coords[1] for P in pts]
        if lead_ok and len(set(us)) == len(us):
            break
    else:
        raise CurveError("no admissible shear")
    R = resultant_v(f, g)
    if R.is_zero():
        raise CurveError("curves share a component")
    rows, used = [], 0
    for (P, m), u0 in zip(pair.points, us):
        k = _root_mult(R, u0)
        used += k
        rows.append({"p": [rat_str(c) for c in P.coords], "mu": P.mu, "mult": m, "resultant_mult": k})
    degR = R.degree()
    extra = degR - used
    at_inf = e1 * e2 - degR
    ok = (extra == 0 and at_inf == 0 and all(r["mult"] == r["resultant_mult"] == r["mu"] for r in rows)
          and sum(r["mult"] for r in rows) == e1 * e2)
    return BezoutReport(e1 * e2, degR, at_inf, rows, extra, s, ok)


@dataclass
class Refutation:
    exponents: tuple
    line_counts: dict
    offending: list

    @property
    def refuted(self):
        return bool(self.offending)

    def to_json(self):
        return {"exponents_if_free": list(self.exponents),
                "points_per_line": {str(k): v for k, v in self.line_counts.items()},
                "offending": self.offending, "refuted": self.refuted}


def bezout_refutation(A, h0: int = 0) -> Refutation:
    """If A were free with exponents (1, e1, e2), a deconed line could carry at most max(e)
    L_2 points; more is a contradiction with Bezout."""
    from .logmodule.freeness import _factor_chi3

    f = _factor_chi3(char_poly(A))
    if f is None:
        raise CurveError("chi does not factor; the Bezout argument is not needed")
    e1, e2 = f
    pts = l2_points(A, h0)
    counts = {}
    for P in pts:
        for h in P.lines:
            counts[h] = counts.get(h, 0) + 1
    bound = max(e1, e2)
    bad = [{"line": h, "points": c, "degree": bound} for h, c in sorted(counts.items()) if c > bound]
    return Refutation((1, e1, e2), counts, bad)
