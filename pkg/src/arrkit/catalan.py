"""A free basis of the coned type A Catalan arrangement from Coxeter data."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import catalan
from .coxeter import invariant_module, make_typeA, psi_k
from .exactmath import Echelon, MPoly, monomial_index, rat_str
from .logmodule import Derivation, SaitoCertificate, delta_p, saito_check

DEFAULT_MAX_N = 3


class CatalanError(ArithmeticError):
    pass


# -- the F_{p,i} family ----------------------------------------------------------


def F(p: int, i: int, n: int = 2) -> MPoly:
    """((x1^(p+1) - x2^(p+1)) / (x1 - x2)) * (x1 - x2)^(2i) in n >= 2 variables."""
    if p < 0 or i < 0:
        raise ValueError("indices must be nonnegative")
    h = MPoly.zero(n)
    for a in range(p + 1):
        e = [0] * n
        e[0], e[1] = a, p - a
        h = h + MPoly.monomial(tuple(e))
    diff = MPoly.var(0, n) - MPoly.var(1, n)
    return h * diff ** (2 * i)


class FpiBasis:
    """The family F_{p,i}, graded by p + 2i."""

    def __init__(self, n: int = 2):
        self.n = n

    def indices(self, d: int):
        return [(d - 2 * i, i) for i in range(d // 2 + 1)]

    def element(self, p, i):
        return F(p, i, self.n)

    def degree_basis(self, d: int):
        return [self.element(p, i) for p, i in self.indices(d)]


def partitions(k: int, maxpart: int):
    """Partitions of k with parts <= maxpart, largest part first."""
    if k == 0:
        yield ()
        return
    for first in range(min(k, maxpart), 0, -1):
        for rest in partitions(k - first, first):
            yield (first,) + rest


def power_sum(j: int, n: int) -> MPoly:
    out = MPoly.zero(n)
    for i in range(n):
        out = out + MPoly.var(i, n) ** j
    return out


def symmetric_basis(k: int, n: int):
    """Power-sum monomials p_lambda spanning the degree-k symmetric polynomials."""
    out = []
    for lam in partitions(k, n):
        f = MPoly.const(1, n)
        for part in lam:
            f = f * power_sum(part, n)
        out.append((lam, f))
    return out


def is_s2_sn2_invariant(G: MPoly, n: int) -> bool:
    swap = list(range(n))
    swap[0], swap[1] = 1, 0
    perms = [swap]
    if n >= 4:
        cyc = [0, 1] + list(range(3, n)) + [2]
        perms.append(cyc)
        t = list(range(n))
        t[2], t[3] = 3, 2
        perms.append(t)
    for perm in perms:
        imgs = [MPoly.var(perm[i], n) for i in range(n)]
        if G.compose(imgs) != G:
            return False
    return True


def fpi_decompose(G: MPoly, n: int = None) -> dict:
    """Coefficients B^{p,r} in S^{S_n} with G = sum B^{p,r} F_{p,r}.

    Solved in the degree of G against {p_lambda F_{p,r}}; columns are sorted
    by the degree of the coefficient, so the echelon particular solution
    prefers low-degree coefficients.
    """
    n = G.nvars if n is None else n
    if G.nvars != n or n < 2:
        raise ValueError("G must live in n >= 2 variables")
    if not G:
        return {}
    if not G.is_homogeneous():
        out = {}
        for part in G.homogeneous_parts().values():
            for k, v in fpi_decompose(part, n).items():
                out[k] = out[k] + v if k in out else v
        return {k: v for k, v in out.items() if v}
    if not is_s2_sn2_invariant(G, n):
        raise CatalanError("G is not invariant under S_2 x S_(n-2)")
    d = G.degree()
    cols = []
    for bdeg in range(d + 1):
        for p, r in FpiBasis(n).indices(d - bdeg):
            Fpr = F(p, r, n)
            for lam, s in symmetric_basis(bdeg, n):
                cols.append(((p, r), lam, s, s * Fpr))
    idx = monomial_index(n, d)
    nc = len(cols)
    rows = {}
    for c, (_, _, _, prod) in enumerate(cols):
        for e, v in prod.items():
            rows.setdefault(idx[e], {})[c] = v
    for e, v in G.items():
        rows.setdefault(idx[e], {})[nc] = -v
    ech = Echelon(nc + 1)
    for r in rows.values():
        ech.add(r)
    if nc in ech.pivots:
        raise CatalanError("G is not in the span of S^{S_n} F_{p,r}")
    red = ech.rref_rows()
    out = {}
    for c, row in red.items():
        coef = -row.get(nc, 0)
        if coef:
            key, _, s, _ = cols[c]
            out[key] = out[key] + s.scale(coef) if key in out else s.scale(coef)
    out = {k: v for k, v in out.items() if v}
    if reconstruct(out, n) != G:
        raise CatalanError("decomposition does not reconstruct G")
    return dict(sorted(out.items()))


def reconstruct(B: dict, n: int) -> MPoly:
    out = MPoly.zero(n)
    for (p, r), b in B.items():
        out = out + b * F(p, r, n)
    return out


# -- lifting from the essential model -------------------------------------------------


def lift_to_full(delta: Derivation, n: int) -> Derivation:
    """Vector field on V = {sum x = 0} (model coords) as a field on C^n.

    F(x) = (f_1, .., f_(n-1), -sum f)(pi x), pi the orthogonal projection to V.
    """
    ell = n - 1
    if delta.nvars != ell:
        raise ValueError("model derivation has the wrong number of variables")
    mean = [Fraction(-1, n)] * n
    imgs = []
    for j in range(ell):
        c = list(mean)
        c[j] += 1
        imgs.append(MPoly.linear(c))
    fs = [c.compose(imgs) for c in delta.coeffs]
    last = MPoly.zero(n)
    for f in fs:
        last = last - f
    return Derivation(fs + [last])


def braid_invariant_basis_m3(n: int):
    """S_n-invariant basis of D(braid(n), 3): delta_0 and lifts of Psi_1 images."""
    out = [delta_p(n, 0)]
    if n == 1:
        return out
    C = make_typeA(n - 1)
    base = invariant_module(C, 1, window=C.h).generators
    if len(base) != n - 1:
        raise CatalanError("invariant basis of the simple Coxeter arrangement has wrong size")
    for b in base:
        out.append(lift_to_full(psi_k(C, b, 1, mult=1), n))
    return out


def _extend(delta: Derivation, extra: int = 1) -> Derivation:
    n = delta.nvars
    coeffs = [c.extend(n + extra) for c in delta.coeffs]
    coeffs += [MPoly.zero(n + extra)] * extra
    return Derivation(coeffs)


@dataclass
class CatalanCertificate:
    n: int
    eta: list
    G: list
    B: list
    eta_tilde: list
    saito: SaitoCertificate

    @property
    def exponents(self):
        return self.saito.exponents

    def to_json(self):
        names = [f"x{i + 1}" for i in range(self.n)] + ["z"]
        return {
            "n": self.n,
            "exponents": list(self.exponents),
            "eta": [e.to_strs(names[:-1]) for e in self.eta],
            "B": [[{"p": p, "r": r, "B": b.to_str(names[:-1])} for (p, r), b in Bi.items()]
                  for Bi in self.B],
            "eta_tilde": [e.to_strs(names) for e in self.eta_tilde],
            "determinant": self.saito.determinant.to_str(names),
            "scalar": rat_str(self.saito.scalar),
        }


def catalan_basis(n: int, allow_large: bool = False) -> CatalanCertificate:
    if n < 2:
        raise ValueError("n must be at least 2")
    if n > DEFAULT_MAX_N:
        if not allow_large:
            raise ValueError(f"n = {n} exceeds the default budget {DEFAULT_MAX_N}")
        warnings.warn(f"catalan_basis({n}) may take a long time", RuntimeWarning)
    try:
        eta = braid_invariant_basis_m3(n)
    except Exception as exc:
        raise CatalanError(f"stage eta: {exc}") from exc
    x12 = MPoly.var(0, n) - MPoly.var(1, n)
    cube = x12 ** 3
    Gs, Bs, tilde = [], [], []
    N1 = n + 1
    z = MPoly.var(n, N1)
    for i, e in enumerate(eta):
        G, r = e.apply_linear((1, -1) + (0,) * (n - 2)).divmod(cube)
        if r:
            raise CatalanError(f"stage G: eta_{i + 1}(x1 - x2) not divisible by (x1 - x2)^3")
        try:
            B = fpi_decompose(G, n) if G else {}
        except CatalanError as exc:
            raise CatalanError(f"stage decomposition: {exc}") from exc
        et = _extend(e)
        for (p, rr), b in B.items():
            corr = _extend(delta_p(n, p + 1))
            fac = b.extend(N1) * z ** (2 * rr + 2)
            et = et - corr.mul(fac)
        Gs.append(G)
        Bs.append(B)
        tilde.append(et)
    A = catalan(n)
    theta = Derivation([MPoly.var(i, N1) for i in range(N1)])
    try:
        cert = saito_check(A, [theta] + tilde)
    except Exception as exc:
        raise CatalanError(f"stage saito: {exc}") from exc
    return CatalanCertificate(n, eta, Gs, Bs, tilde, cert)
