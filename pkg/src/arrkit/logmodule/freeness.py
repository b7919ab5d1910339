"""Exponents, restriction maps and freeness verdicts."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import isqrt

from ..arrangement import (
    ArrangementError, canonical_covector, delete, essentialize, localize, restrict,
    ziegler_restrict,
)
from ..exactmath import Echelon, UPoly, dim_homogeneous, mpoly_divides
from .derivation import Derivation, MembershipError, euler
from .graded import d_dim, d_echelon, default_cutoff, free_dims, minimal_generators
from .saito import SaitoCertificate, SaitoError, saito_check
from .systems import divisible_rows, polys_to_vector, vector_to_polys


class FitError(ArithmeticError):
    """Graded dims do not match any free module (should not happen in rank 2)."""


class AdditionDeletionError(AssertionError):
    pass


# -- rank <= 2 ---------------------------------------------------------------


def rank2_exponents(A, mult=None):
    """(e1, e2) of a rank-2 multiarrangement, read off graded dims."""
    A = A if mult is None else A.with_mult(mult)
    E, _ = essentialize(A)
    if E.dim != 2:
        raise ArrangementError(f"rank2_exponents needs rank 2, got rank {E.dim}")
    total = E.size
    dims = {d: d_dim(E, d) for d in range(total + 1)}
    e1 = next((d for d in range(total + 1) if dims[d] > 0), None)
    if e1 is None:
        raise FitError(f"no derivation up to degree {total}")
    e2 = e1 if dims[e1] == 2 else total - e1
    for d, v in dims.items():
        if v != free_dims((e1, e2), 2, d):
            raise FitError(f"graded dims {sorted(dims.items())} do not fit exponents ({e1},{e2})")
    return tuple(sorted((e1, e2)))


def low_rank_exponents(A):
    """Exponents of a multiarrangement of rank <= 2, padded with zeros."""
    E, _ = essentialize(A)
    zeros = (0,) * (A.dim - E.dim)
    if E.dim == 0:
        return zeros
    if E.dim == 1:
        return zeros + (E.size,)
    return tuple(sorted(zeros + rank2_exponents(E)))


# -- Euler decomposition and Ziegler restriction -----------------------------


def euler_decompose(A, h: int, delta: Derivation):
    """delta = (delta(a)/a) theta_E + delta0 with delta0(a) = 0, a = alpha_h."""
    if not delta.is_member(A):
        raise MembershipError("derivation is not in D(A)")
    a = A.alpha(h)
    g = delta(a)
    ok, f = mpoly_divides(a, g)
    if not ok:
        raise MembershipError("alpha_H does not divide delta(alpha_H)")
    part = euler(A.dim).mul(f)
    return part, delta - part


def d0_rows(alpha, n: int, d: int):
    """Rows imposing delta(alpha) = 0 on degree-d derivations."""
    M = dim_homogeneous(n, d)
    rows = []
    for j in range(M):
        r = {i * M + j: a for i, a in enumerate(alpha) if a}
        rows.append(r)
    return rows


def d0_piece(A, h: int, d: int):
    """Basis of D_0^H(A)_d = {delta in D(A)_d : delta(alpha_H) = 0}."""
    n = A.dim
    ech = d_echelon(A, d, extra=d0_rows(A.hyperplanes[h], n, d))
    return [Derivation(vector_to_polys(v, n, d, n)) for v in ech.kernel()]


def restrict_derivation(delta: Derivation, chart) -> Derivation:
    """Vector field on H induced by a derivation tangent to H (chart coordinates)."""
    imgs = chart.restriction_images()
    return Derivation([delta.coeffs[j].compose(imgs) for j in chart.kept])


@dataclass
class ZieglerCoker:
    dim: int
    by_degree: dict
    exponents: tuple
    b3: int
    prediction: int

    @property
    def agrees(self):
        return self.dim == self.prediction


def ziegler_coker_dim(A, h: int, cutoff=None) -> ZieglerCoker:
    """dim coker(D_0^H(A) -> D(A^H, m^H)) for a simple rank-3 arrangement."""
    from ..lattice import poincare_poly

    if A.dim != 3 or A.rank != 3:
        raise ArrangementError("ziegler_coker_dim needs an essential rank-3 arrangement")
    R = ziegler_restrict(A, h)
    B = R.ambient
    exps = rank2_exponents(B)
    b3 = poincare_poly(A).coeff(3)
    if cutoff is None:
        cutoff = default_cutoff(A) + 10
    by = {}
    d = 0
    while True:
        if d > cutoff:
            raise ArithmeticError(f"cokernel did not stabilize by degree {cutoff}")
        target = d_dim(B, d)
        ech = Echelon(2 * dim_homogeneous(2, d))
        for delta in d0_piece(A, h, d):
            r = restrict_derivation(delta, R.chart)
            ech.add(polys_to_vector(r.coeffs, 2, d))
        by[d] = target - ech.rank
        if d >= max(exps) and by[d] == 0:
            break
        d += 1
    return ZieglerCoker(sum(by.values()), by, exps, b3, b3 - exps[0] * exps[1])


# -- verdicts ----------------------------------------------------------------


@dataclass
class FreenessVerdict:
    kind: str  # "free" | "not_free" | "unknown"
    exponents: tuple = ()
    certificate: SaitoCertificate = None
    method: str = ""
    witness: str = ""
    data: dict = field(default_factory=dict)
    reason: str = ""

    @property
    def is_free(self):
        return self.kind == "free"

    def to_json(self):
        out = {"verdict": self.kind}
        if self.kind == "free":
            out["exponents"] = list(self.exponents)
            out["method"] = self.method
            if self.certificate is not None:
                c = self.certificate.to_json()
                out["basis"] = c["basis"]
                out["determinant"] = c["determinant"]
                out["scalar"] = c["scalar"]
        elif self.kind == "not_free":
            out["witness"] = self.witness
            out["method"] = self.method
            if self.data:
                out["data"] = self.data
        else:
            out["reason"] = self.reason
        return out


def saito_search(A, cutoff=None):
    """(certificate or None, generator degrees) from minimal generators up to cutoff."""
    gens = minimal_generators(A, cutoff)
    if len(gens.degrees) != A.dim:
        return None, gens
    try:
        return saito_check(A, gens.representatives), gens
    except SaitoError:
        return None, gens


def _factor_chi3(chi: UPoly):
    """(e2, e3) with chi = (t-1)(t-e2)(t-e3), nonnegative integers, else None."""
    q, r = chi.divmod(UPoly([-1, 1]))
    if not r.is_zero() or q.degree() != 2:
        return None
    c0, c1, _ = q.poly_coeffs()
    s, p = -c1, c0
    disc = s * s - 4 * p
    if disc < 0 or getattr(disc, "denominator", 1) != 1:
        return None
    root = isqrt(int(disc))
    if root * root != disc or (s + root) % 2:
        return None
    e2, e3 = (s - root) // 2, (s + root) // 2
    if e2 < 0:
        return None
    return int(e2), int(e3)


def _free(A, exps, method, cert=None, data=None):
    from ..lattice import char_poly

    exps = tuple(sorted(exps))
    if cert is None:
        cert, _ = saito_search(A, max(exps) if exps else 0)
        if cert is None or cert.exponents != exps:
            raise AssertionError(f"no Saito basis found for claimed exponents {exps}")
    if sum(exps) != A.size:
        raise AssertionError("exponent sum of a free verdict differs from |m|")
    if A.is_simple and A.active:
        if char_poly(A) != UPoly.from_roots(exps):
            raise AssertionError("free verdict whose exponents do not factor chi")
    return FreenessVerdict("free", exps, cert, method, data=data or {})


def freeness_test(A, cutoff=None) -> FreenessVerdict:
    A = A.nonzero() if A.active else A
    E, piv = essentialize(A)
    r = E.dim
    pad = (0,) * (A.dim - r)
    if r <= 2:
        return _free(A, low_rank_exponents(A), "rank2")
    if not A.is_simple:
        cert, gens = saito_search(A, cutoff)
        if cert is not None:
            return _free(A, cert.exponents, "saito", cert)
        if len(gens.degrees) > A.dim:
            return FreenessVerdict(
                "not_free", method="saito",
                witness=f"{len(gens.degrees)} minimal generators in degrees {gens.degrees} exceed rank {A.dim}",
                data={"generator_degrees": gens.degrees})
        return FreenessVerdict("unknown", reason=f"generator search exhausted cutoff; degrees {gens.degrees}")
    if r == 3:
        from ..lattice import char_poly

        chi = char_poly(E)
        f = _factor_chi3(chi)
        if f is None:
            return FreenessVerdict("not_free", method="cor3dim",
                                   witness=f"chi = {chi} does not factor as (t-1)(t-a)(t-b)",
                                   data={"chi": chi.int_coeffs()})
        R = ziegler_restrict(E, 0)
        rexp = rank2_exponents(R.ambient)
        if tuple(sorted(rexp)) != tuple(sorted(f)):
            return FreenessVerdict(
                "not_free", method="cor3dim",
                witness=f"restriction exponents ({rexp[0]},{rexp[1]}) != ({f[0]},{f[1]})",
                data={"chi": chi.int_coeffs(), "restriction_exponents": list(rexp),
                      "chi_roots": list(f), "hyperplane": list(A.hyperplanes[A.active[0]])})
        return _free(A, pad + (1,) + tuple(f), "cor3dim")
    return _characterization(A, E, pad, cutoff)


def _characterization(A, E, pad, cutoff):
    """Rank >= 4: free multirestriction plus free localizations along H."""
    from ..lattice import build_lattice

    R = ziegler_restrict(E, 0)
    cert, gens = saito_search(R.ambient, cutoff)
    if cert is None:
        if len(gens.degrees) > R.ambient.dim:
            return FreenessVerdict(
                "not_free", method="char",
                witness=f"Ziegler restriction has {len(gens.degrees)} minimal generators",
                data={"generator_degrees": gens.degrees})
        return FreenessVerdict("unknown", reason="Ziegler restriction search inconclusive")
    L = build_lattice(E)
    for X in L.flats_in(0):
        if X.codim in (0, E.dim):
            continue
        sub = freeness_test(localize(E, X))
        if sub.kind == "not_free":
            return FreenessVerdict("not_free", method="char",
                                   witness=f"localization at {sorted(X.contains)} is not free: {sub.witness}")
        if sub.kind != "free":
            return FreenessVerdict("unknown", reason=f"localization at {sorted(X.contains)}: {sub.reason}")
    return _free(A, pad + (1,) + tuple(cert.exponents), "char")


# -- Euler multiplicity and Addition-Deletion --------------------------------


def m_star(A, h0: int, others) -> int:
    """Degree of theta_X for X = H0 cap H (any H in ``others``)."""
    idx = {h0, *others}
    L = localize(A, idx)
    E, piv = essentialize(L)
    if E.dim != 2:
        raise ArrangementError("m_star needs a codimension-two flat")
    a0 = canonical_covector([A.hyperplanes[h0][p] for p in piv])
    M0 = lambda d: dim_homogeneous(2, d)  # noqa: E731
    for d in range(E.size + 1):
        full = d_dim(E, d)
        if not full:
            continue
        ech = d_echelon(E, d, extra=divisible_rows(a0, 1, d, 2, M0(d)))
        if ech.ncols - ech.rank < full:
            return d
    raise ArithmeticError("no derivation outside alpha_0 * Der up to |m|")


def euler_restriction(A, h0: int):
    """(A'', m*) on H0 in chart coordinates."""
    R = restrict(A, h0)
    mult = tuple(m_star(A, h0, origin) for origin in R.origin_map)
    return R.ambient.with_mult(mult), R


def _msub(a, b):
    c = Counter(a)
    c.subtract(Counter(b))
    if any(v < 0 for v in c.values()):
        return None
    return sorted(c.elements())


def _diff(a, b):
    """Multiset differences (a - b, b - a) as sorted lists."""
    ca, cb = Counter(a), Counter(b)
    return sorted((ca - cb).elements()), sorted((cb - ca).elements())


def infer_exponents(E=None, E1=None, E2=None):
    """Given two of (E, E', E''), the third per Addition-Deletion, or None."""
    if E is not None and E1 is not None and E2 is None:
        w, v = _diff(E, E1)
        if len(w) != 1 or v != [w[0] - 1]:
            return None
        return tuple(_msub(E, w))
    if E is not None and E2 is not None and E1 is None:
        w = _msub(E, E2)
        if w is None or len(w) != 1 or w[0] < 1:
            return None
        return tuple(sorted(list(E2) + [w[0] - 1]))
    if E1 is not None and E2 is not None and E is None:
        v = _msub(E1, E2)
        if v is None or len(v) != 1:
            return None
        return tuple(sorted(list(E2) + [v[0] + 1]))
    raise ValueError("give exactly two of the three exponent lists")


def check_triple(E, E1, E2):
    """Assert mutual consistency of three computed exponent lists."""
    E, E1, E2 = (tuple(sorted(x)) for x in (E, E1, E2))
    for args, want, name in (((E, E1, None), E2, "A''"), ((E, None, E2), E1, "A'"),
                             ((None, E1, E2), E, "A")):
        got = infer_exponents(*args)
        if got is not None and tuple(got) != want:
            raise AdditionDeletionError(f"inferred {name} exponents {got} but computed {want}")
    if infer_exponents(None, E1, E2) is None and infer_exponents(E, E1, None) is None:
        raise AdditionDeletionError(f"exponents {E}, {E1}, {E2} are not an addition-deletion triple")
    return True


@dataclass
class AddDelRecord:
    hyperplane: int
    exponents: dict
    computed: tuple
    used: tuple
    inferred: str
    verdict: str

    def to_json(self):
        return {"hyperplane": self.hyperplane,
                "exponents": {k: (list(v) if v is not None else None) for k, v in self.exponents.items()},
                "computed": list(self.computed), "used": list(self.used),
                "inferred": self.inferred, "verdict": self.verdict}


def _exps_or_none(M, known=None):
    if known is not None:
        return tuple(sorted(known))
    v = freeness_test(M)
    return v.exponents if v.is_free else None


def addition_deletion(A, h0: int, known=None, compute=("A", "A'", "A''")) -> AddDelRecord:
    """Addition-Deletion at H0.  ``known`` may pre-supply exponents by key."""
    if A.mult[h0] <= 0:
        raise ArrangementError("m(H0) must be positive")
    known = dict(known or {})
    Ap = delete(A, h0)
    App, _ = euler_restriction(A, h0)
    parts = {"A": A, "A'": Ap, "A''": App}
    exps = {}
    for key in ("A", "A'", "A''"):
        if key in known:
            exps[key] = tuple(sorted(known[key]))
        elif key in compute:
            exps[key] = _exps_or_none(parts[key])
        else:
            exps[key] = None
    have = [k for k in ("A", "A'", "A''") if exps[k] is not None]
    if len(have) == 3:
        check_triple(exps["A"], exps["A'"], exps["A''"])
    if len(have) < 2:
        return AddDelRecord(h0, exps, tuple(have), (), "", "unknown")
    order = {("A'", "A''"): "A", ("A", "A''"): "A'", ("A", "A'"): "A''"}
    for pair, target in order.items():
        if all(exps[p] is not None for p in pair):
            args = {"A": None, "A'": None, "A''": None}
            for p in pair:
                args[p] = list(exps[p])
            got = infer_exponents(args["A"], args["A'"], args["A''"])
            if got is None:
                continue
            if exps[target] is not None and tuple(got) != exps[target]:
                raise AdditionDeletionError(f"inferred {target} {got} but computed {exps[target]}")
            exps[target] = tuple(got)
            return AddDelRecord(h0, exps, tuple(have), pair, target, "free")
    return AddDelRecord(h0, exps, tuple(have), (), "", "unknown")


@dataclass
class ChainStep:
    added: tuple
    exponents: tuple
    record: AddDelRecord


def addition_chain(A, start=None):
    """Build A hyperplane by hyperplane, inferring exponents at every step.

    Starts from ``start`` (default: a maximal independent subset, which is
    Boolean); each step uses the previous arrangement as A' and computes A''.
    """
    from ..arrangement import Multiarrangement

    if not A.is_simple:
        raise ArrangementError("addition_chain works on simple arrangements")
    hs = list(A.hyperplanes)
    if start is None:
        start = []
        ech = Echelon(A.dim)
        for i, c in enumerate(hs):
            if ech.add({j: v for j, v in enumerate(c) if v}):
                start.append(i)
    cur = list(start)
    sub = Multiarrangement(A.dim, tuple(hs[i] for i in cur), (1,) * len(cur))
    exps = low_rank_exponents(sub) if sub.rank <= 2 else freeness_test(sub).exponents
    steps = [ChainStep(tuple(hs[i] for i in cur), tuple(exps), None)]
    remaining = [i for i in range(len(hs)) if i not in cur]
    while remaining:
        for i in remaining:
            nxt = cur + [i]
            B = Multiarrangement(A.dim, tuple(hs[j] for j in nxt), (1,) * len(nxt))
            rec = addition_deletion(B, len(nxt) - 1, known={"A'": exps}, compute=("A''",))
            if rec.verdict == "free":
                cur, exps = nxt, rec.exponents["A"]
                steps.append(ChainStep((hs[i],), tuple(exps), rec))
                remaining.remove(i)
                break
        else:
            raise ArithmeticError(f"no addable hyperplane among {remaining}")
    return steps
