"""Type A invariant theory: basic invariants, primitive derivation, the maps Phi_k, Psi_k.

The reflection representation of S_(l+1) is modelled on V = {sum x = 0} with
coordinates x_1..x_l; x_(l+1) = -(x_1 + ... + x_l) is eliminated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arrangement import Multiarrangement, canonical_covector, make
from .exactmath import (
    Echelon, MPoly, RatMatrix, det_poly, dim_homogeneous, mpoly_divides, norm,
)
from .logmodule import Derivation, LogForm, d_graded_piece, euler
from .logmodule.derivation import MembershipError
from .logmodule.systems import polys_to_vector, vector_to_polys


class CoxeterError(ArithmeticError):
    pass


# -- rational functions with poles on the arrangement -------------------------


class RatFunc:
    """num / prod alpha^k over covectors; kept reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den=None, reduce=True):
        self.num = num
        self.den = {c: k for c, k in (den or {}).items() if k > 0}
        if reduce:
            self._reduce()

    def _reduce(self):
        if not self.num:
            self.den = {}
            return
        for c in list(self.den):
            a = MPoly.linear(c)
            while self.den.get(c, 0) > 0:
                q, r = self.num.divmod(a)
                if r:
                    break
                self.num = q
                self.den[c] -= 1
            if not self.den[c]:
                del self.den[c]

    @property
    def nvars(self):
        return self.num.nvars

    def is_polynomial(self):
        return not self.den

    def as_poly(self) -> MPoly:
        if self.den:
            raise CoxeterError("rational function has poles")
        return self.num

    def is_zero(self):
        return not self.num

    def degree(self):
        return self.num.degree() - sum(self.den.values()) if self.num else None

    def _lift(self, den):
        f = self.num
        for c, k in den.items():
            extra = k - self.den.get(c, 0)
            if extra:
                f = f * MPoly.linear(c) ** extra
        return f

    def __add__(self, o):
        if isinstance(o, MPoly):
            o = RatFunc(o)
        den = dict(self.den)
        for c, k in o.den.items():
            den[c] = max(den.get(c, 0), k)
        return RatFunc(self._lift(den) + o._lift(den), den)

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, o):
        return self + (-(o if isinstance(o, RatFunc) else RatFunc(o)))

    def __mul__(self, o):
        if isinstance(o, MPoly):
            return RatFunc(self.num * o, self.den)
        if isinstance(o, (int, Fraction)):
            return RatFunc(self.num.scale(o), self.den, reduce=False)
        den = dict(self.den)
        for c, k in o.den.items():
            den[c] = den.get(c, 0) + k
        return RatFunc(self.num * o.num, den)

    __rmul__ = __mul__

    def diff(self, j: int) -> "RatFunc":
        if not self.den:
            return RatFunc(self.num.diff(j))
        n = self.nvars
        pole = [(c, k) for c, k in self.den.items()]
        alphas = [MPoly.linear(c) for c, _ in pole]
        prod_all = MPoly.const(1, n)
        for a in alphas:
            prod_all = prod_all * a
        total = self.num.diff(j) * prod_all
        for i, (c, k) in enumerate(pole):
            if not c[j]:
                continue
            others = MPoly.const(1, n)
            for i2, a in enumerate(alphas):
                if i2 != i:
                    others = others * a
            total = total - self.num * others.scale(k * c[j])
        den = {c: k + 1 for c, k in pole}
        return RatFunc(total, den)

    def __eq__(self, o):
        if isinstance(o, MPoly):
            o = RatFunc(o)
        return isinstance(o, RatFunc) and self.num == o.num and self.den == o.den

    def __str__(self):
        if not self.den:
            return self.num.to_str()
        d = "*".join(f"({MPoly.linear(c).to_str()})^{k}" for c, k in sorted(self.den.items()))
        return f"({self.num.to_str()}) / {d}"


def _rf(x):
    return x if isinstance(x, RatFunc) else RatFunc(x)


@dataclass
class RatDerivation:
    """sum coeffs[j] d/dx_j with rational coefficients."""

    coeffs: tuple

    @property
    def nvars(self):
        return len(self.coeffs)

    def __call__(self, f) -> RatFunc:
        f = _rf(f)
        out = RatFunc(MPoly.zero(self.nvars))
        for j, c in enumerate(self.coeffs):
            if not c.is_zero():
                out = out + c * f.diff(j)
        return out

    def is_polynomial(self):
        return all(c.is_polynomial() for c in self.coeffs)

    def as_derivation(self) -> Derivation:
        return Derivation([c.as_poly() for c in self.coeffs])

    @classmethod
    def of(cls, delta: Derivation):
        return cls(tuple(RatFunc(c) for c in delta.coeffs))


def nabla(delta, target):
    """Apply delta coefficientwise to a derivation, 1-form coefficients or a function."""
    if isinstance(delta, Derivation):
        delta = RatDerivation.of(delta)
    if isinstance(target, (MPoly, RatFunc)):
        return delta(target)
    if isinstance(target, Derivation):
        target = RatDerivation.of(target)
    if isinstance(target, RatDerivation):
        return RatDerivation(tuple(delta(c) for c in target.coeffs))
    if isinstance(target, RatForm):
        return RatForm(tuple(delta(c) for c in target.coeffs))
    raise TypeError(f"cannot apply nabla to {type(target).__name__}")


@dataclass
class RatForm:
    """1-form sum coeffs[j] dx_j with rational coefficients."""

    coeffs: tuple

    def to_logform(self) -> LogForm:
        den = {}
        for c in self.coeffs:
            for cov, k in c.den.items():
                den[cov] = max(den.get(cov, 0), k)
        nums = {}
        for j, c in enumerate(self.coeffs):
            if not c.is_zero():
                nums[(j,)] = c._lift(den)
        return LogForm(1, len(self.coeffs), nums, tuple(sorted(den.items())))


# -- the Coxeter data ----------------------------------------------------------


@dataclass
class CoxeterData:
    ell: int
    h: int
    arrangement: Multiarrangement
    invariants: tuple
    jacobian: MPoly
    scalar: object
    cofactors: tuple  # cofactors[i][j]: coefficient of d_j in Delta * d/dP_i
    generators: tuple = field(default=())  # simple transpositions as l x l matrices

    @property
    def degrees(self):
        return tuple(P.degree() for P in self.invariants)

    @property
    def exponents(self):
        return tuple(d - 1 for d in self.degrees)

    def to_json(self):
        return {
            "type": f"A{self.ell}", "h": self.h,
            "invariants": [P.to_str() for P in self.invariants],
            "jacobian": self.jacobian.to_str(),
            "jacobian_scalar": str(self.scalar),
            "hyperplanes": [list(c) for c in self.arrangement.hyperplanes],
        }


def _type_a_covectors(ell):
    covs = []
    for i in range(ell + 1):
        for j in range(i + 1, ell + 1):
            v = [0] * ell
            v[i] += 1
            if j < ell:
                v[j] -= 1
            else:
                v = [x + 1 for x in v]
            covs.append(tuple(v))
    return covs


def _perm_matrix(perm, ell):
    """Matrix of x -> sigma x on the model, (sigma x)_i = x_{perm[i]}."""
    rows = []
    for i in range(ell):
        src = perm[i]
        if src < ell:
            rows.append(tuple(1 if j == src else 0 for j in range(ell)))
        else:
            rows.append(tuple(-1 for _ in range(ell)))
    return tuple(rows)


def type_a_arrangement(ell: int) -> Multiarrangement:
    return make(ell, [canonical_covector(c) for c in _type_a_covectors(ell)])


@lru_cache(maxsize=None)
def make_typeA(ell: int) -> CoxeterData:
    if ell < 1:
        raise ValueError("rank must be positive")
    n = ell
    A = type_a_arrangement(ell)
    xs = [MPoly.var(i, n) for i in range(n)]
    last = MPoly.linear([-1] * n)
    full = xs + [last]
    P = []
    for k in range(2, ell + 2):
        p = MPoly.zero(n)
        for x in full:
            p = p + x ** k
        P.append(p)
    J = [[P[i].diff(j) for j in range(n)] for i in range(n)]
    delta = det_poly(J)
    if not delta:
        raise CoxeterError("Jacobian vanishes")
    Q = A.defining_polynomial()
    ok, q = mpoly_divides(Q, delta)
    if not ok or not q.is_constant():
        raise CoxeterError("Jacobian is not a scalar multiple of the defining polynomial")
    # Cramer on J^T: Delta * d/dP_i = sum_j cof(J^T)[j][i] d_j
    MT = [[J[i][j] for i in range(n)] for j in range(n)]
    cof = []
    for i in range(n):
        row = []
        for j in range(n):
            if n == 1:
                c = MPoly.const(1, n)
            else:
                minor = [[MT[r][s] for s in range(n) if s != i] for r in range(n) if r != j]
                c = det_poly(minor).scale((-1) ** (i + j))
            row.append(c)
        cof.append(tuple(row))
    gens = []
    for i in range(ell):
        perm = list(range(ell + 1))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append(_perm_matrix(perm, ell))
    return CoxeterData(ell, ell + 1, A, tuple(P), delta, norm(q.constant_value()),
                       tuple(cof), tuple(gens))


def _inv_delta(C: CoxeterData):
    den = {c: 1 for c in C.arrangement.hyperplanes}
    return den, Fraction(1) / C.scalar


def d_dP(C: CoxeterData, i: int) -> RatDerivation:
    """The rational vector field d/dP_i (i from 1)."""
    den, s = _inv_delta(C)
    return RatDerivation(tuple(RatFunc(c.scale(s), den) for c in C.cofactors[i - 1]))


def dP(C: CoxeterData, f: MPoly, i: int) -> RatFunc:
    """df/dP_i by the column-replacement determinant over Delta."""
    n = C.ell
    J = [[C.invariants[r].diff(j) for j in range(n)] for r in range(n)]
    J[i - 1] = [f.diff(j) for j in range(n)]
    num = det_poly(J)
    den, s = _inv_delta(C)
    return RatFunc(num.scale(s), den)


def primitive_derivation(C: CoxeterData) -> RatDerivation:
    return d_dP(C, C.ell)


def dP1_form(C: CoxeterData) -> RatForm:
    P1 = C.invariants[0]
    return RatForm(tuple(RatFunc(P1.diff(j)) for j in range(C.ell)))


# -- W-action -------------------------------------------------------------------


def _apply_matrix(M, v):
    return [sum(M[i][j] * v[j] for j in range(len(v))) for i in range(len(M))]


def _mat_images(M, n):
    return [MPoly.linear(M[i]) for i in range(n)]


def act(M, F: Derivation) -> Derivation:
    """(M . F)(x) = M F(M^-1 x); F is invariant iff this equals F for all M."""
    n = F.nvars
    inv = _inverse(M)
    imgs = _mat_images(inv, n)
    comp = [c.compose(imgs) for c in F.coeffs]
    out = []
    for i in range(n):
        acc = MPoly.zero(n)
        for j in range(n):
            if M[i][j]:
                acc = acc + comp[j].scale(M[i][j])
        out.append(acc)
    return Derivation(out)


def _inverse(M):
    n = len(M)
    aug = RatMatrix([list(M[i]) + [1 if i == j else 0 for j in range(n)] for i in range(n)], 2 * n)
    red, piv, r = aug.rref()
    if piv[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return tuple(tuple(red[i, n + j] for j in range(n)) for i in range(n))


def is_invariant(C: CoxeterData, F: Derivation) -> bool:
    return all(act(M, F) == F for M in C.generators)


def group_matrices(C: CoxeterData):
    ell = C.ell
    return [_perm_matrix(p, ell) for p in itertools.permutations(range(ell + 1))]


def reynolds(C: CoxeterData, F: Derivation) -> Derivation:
    mats = group_matrices(C)
    acc = Derivation.zero(C.ell)
    for M in mats:
        acc = acc + act(M, F)
    return acc.scale(Fraction(1, len(mats)))


def invariant_piece(C: CoxeterData, m: int, d: int, method: str = "linear"):
    """Basis of D(A, m)^W_d.

    ``linear`` imposes F(sx) = sF(x) for the simple transpositions on the
    coefficient space; ``reynolds`` averages a basis of D(A, m)_d.
    """
    n = C.ell
    basis = d_graded_piece(C.arrangement, d, mult=m)
    if not basis:
        return []
    if method == "reynolds":
        ech = Echelon(n * dim_homogeneous(n, d))
        out = []
        for b in basis:
            r = reynolds(C, b)
            if not r.is_zero() and ech.add(polys_to_vector(r.coeffs, n, d)):
                out.append(r)
        return _echelonize(out, n, d)
    if method != "linear":
        raise ValueError(f"unknown method {method!r}")
    # columns are basis coefficients lambda_b
    rows = {}
    for b_idx, b in enumerate(basis):
        for g, M in enumerate(C.generators):
            diff = act(M, b) - b
            vec = polys_to_vector(diff.coeffs, n, d)
            for k, v in vec.items():
                rows.setdefault((g, k), {})[b_idx] = v
    ech = Echelon(len(basis))
    for r in rows.values():
        ech.add(r)
    out = []
    for lam in ech.kernel():
        acc = Derivation.zero(n)
        for c, b in zip(lam, basis):
            if c:
                acc = acc + b.scale(c)
        out.append(acc)
    return _echelonize(out, n, d)


def _echelonize(ders, n, d):
    """Canonical basis (reduced echelon) of the span of the given derivations."""
    ech = Echelon(n * dim_homogeneous(n, d))
    for x in ders:
        ech.add(polys_to_vector(x.coeffs, n, d))
    red = ech.rref_rows()
    return [Derivation(vector_to_polys(_dense(red[p], n * dim_homogeneous(n, d)), n, d, n))
            for p in sorted(red)]


def _dense(row, size):
    v = [0] * size
    for k, x in row.items():
        v[k] = norm(x)
    return v


# -- Phi_k, Psi_k ------------------------------------------------------------------


def _check_m01(mult):
    if any(k not in (0, 1) for k in mult):
        raise ValueError("multiplicity must take values in {0, 1}")


def phi_k(C: CoxeterData, delta: Derivation, k: int, mult=None) -> LogForm:
    """nabla_delta nabla_D^k dP_1, checked to lie in Omega^1(A, 2k - m)."""
    if k < 1:
        raise ValueError("k must be positive")
    A = C.arrangement
    mult = tuple(A.mult if mult is None else ([mult] * len(A) if isinstance(mult, int) else mult))
    _check_m01(mult)
    if not delta.is_member(A, mult):
        raise MembershipError("delta is not in D(A, m)")
    D = primitive_derivation(C)
    w = dP1_form(C)
    for _ in range(k):
        w = nabla(D, w)
    out = nabla(delta, w).to_logform()
    target = tuple(2 * k - x for x in mult)
    if not out.is_zero() and not out.is_member(A, target):
        raise MembershipError("Phi_k image fails the pole test")
    return out


@lru_cache(maxsize=None)
def _Y(ell: int, j: int) -> Derivation:
    """Y_j in D(A, 2j+1)^W of degree 1 + jh with nabla_D Y_j = Y_(j-1)."""
    C = make_typeA(ell)
    n = ell
    if j == 0:
        return euler(n)
    prev = _Y(ell, j - 1)
    d = 1 + j * C.h
    cands = invariant_piece(C, 2 * j + 1, d)
    if not cands:
        raise CoxeterError(f"no invariant derivation of degree {d} in D(A, {2 * j + 1})")
    # Delta/scalar * nabla_D Y = sum_j cof_j d_j(Y): polynomial identity against Prod alpha * prev
    cof = C.cofactors[n - 1]
    Q = C.arrangement.defining_polynomial()
    rhs = [c * Q.scale(C.scalar) for c in prev.coeffs]
    dd = d - C.h + C.jacobian.degree()
    cols = len(cands)
    rows = {}
    for b, Yb in enumerate(cands):
        img = [sum((cof[jj] * Yb.coeffs[i].diff(jj) for jj in range(n)), MPoly.zero(n))
               for i in range(n)]
        for key, v in polys_to_vector(img, n, dd).items():
            rows.setdefault(key, {})[b] = v
    for key, v in polys_to_vector(rhs, n, dd).items():
        rows.setdefault(key, {})[cols] = -v
    ech = Echelon(cols + 1)
    for r in rows.values():
        ech.add(r)
    if cols in ech.pivots:
        raise CoxeterError(f"nabla_D Y = Y_{j - 1} has no invariant solution in degree {d}")
    if ech.rank != cols:
        raise CoxeterError(
            f"solution of nabla_D Y = Y_{j - 1} in degree {d} is not unique "
            f"({cols - ech.rank} free parameters)")
    red = ech.rref_rows()
    acc = Derivation.zero(n)
    for b in range(cols):
        coef = -red[b].get(cols, 0)
        if coef:
            acc = acc + cands[b].scale(coef)
    return acc


def nabla_D_inverse_euler(C: CoxeterData, k: int) -> Derivation:
    return _Y(C.ell, k)


def psi_k(C: CoxeterData, delta: Derivation, k: int, mult=None) -> Derivation:
    """nabla_delta nabla_D^-k theta_E, checked to lie in D(A, 2k + m)."""
    if k < 1:
        raise ValueError("k must be positive")
    A = C.arrangement
    mult = tuple(A.mult if mult is None else ([mult] * len(A) if isinstance(mult, int) else mult))
    _check_m01(mult)
    if not delta.is_member(A, mult):
        raise MembershipError("delta is not in D(A, m)")
    Y = _Y(C.ell, k)
    out = Derivation([delta(c) for c in Y.coeffs])
    if not out.is_member(A, tuple(2 * k + x for x in mult)):
        raise MembershipError("Psi_k image is not in D(A, 2k + m)")
    return out


def rational_to_derivation(F: RatDerivation) -> Derivation:
    if not F.is_polynomial():
        raise CoxeterError("vector field has poles")
    return F.as_derivation()


# -- invariant modules ----------------------------------------------------------------


@dataclass
class InvariantBasis:
    m: int
    generators: list
    degrees: list
    dims: dict
    method: str
    window: int

    def to_json(self):
        return {"m": self.m, "degrees": self.degrees,
                "generators": [g.to_strs() for g in self.generators],
                "dims": {str(k): v for k, v in self.dims.items()},
                "projector": self.method, "window": self.window}


def invariant_module(C: CoxeterData, m: int, window=None, method: str = "linear") -> InvariantBasis:
    """S^W-module generators of D(A, m)^W found degree by degree."""
    if m < 0:
        raise ValueError("multiplicity must be nonnegative")
    n = C.ell
    k = m // 2
    if window is None:
        window = k * C.h + C.h
    pieces = {}
    gens, degs = [], []
    degP = C.degrees
    for d in range(window + 1):
        piece = invariant_piece(C, m, d, method)
        pieces[d] = piece
        if not piece:
            continue
        size = n * dim_homogeneous(n, d)
        ech = Echelon(size)
        for P, e in zip(C.invariants, degP):
            for F in pieces.get(d - e, []):
                ech.add(polys_to_vector([c * P for c in F.coeffs], n, d))
        for F in piece:
            if ech.add(polys_to_vector(F.coeffs, n, d)):
                gens.append(F)
                degs.append(d)
    return InvariantBasis(m, gens, degs, {d: len(p) for d, p in pieces.items()}, method, window)


def constant_multiplicity_basis(C: CoxeterData, m: int):
    """Free basis of D(A, m) for constant m via Psi_k, k = m // 2."""
    k, r = divmod(m, 2)
    if k == 0:
        if r == 0:
            return [Derivation([MPoly.const(1 if i == j else 0, C.ell) for j in range(C.ell)])
                    for i in range(C.ell)]
        return invariant_module(C, 1, window=C.h).generators
    if r == 0:
        base = [Derivation([MPoly.const(1 if i == j else 0, C.ell) for j in range(C.ell)])
                for i in range(C.ell)]
    else:
        base = invariant_module(C, 1, window=C.h).generators
    return [psi_k(C, b, k, mult=r) for b in base]
