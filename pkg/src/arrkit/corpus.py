"""The verification corpus: each check returns a list of named exact comparisons."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from itertools import combinations

from . import arrangement as ar
from .exactmath import MPoly, UPoly
from .lattice import (betti, build_lattice, chamber_count, char_poly, fq_count, moebius_by_zeta_inversion,
                      poincare_poly)


@dataclass
class Check:
    name: str
    expected: object
    got: object

    @property
    def ok(self):
        return self.expected == self.got


@dataclass
class CriterionResult:
    number: int
    title: str
    checks: list = field(default_factory=list)
    seconds: float = 0.0
    error: str = ""

    @property
    def passed(self):
        return not self.error and bool(self.checks) and all(c.ok for c in self.checks)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        bad = [c.name for c in self.checks if not c.ok]
        extra = f"  error: {self.error}" if self.error else (f"  failing: {', '.join(bad)}" if bad else "")
        return f"[{status}] {self.number}. {self.title} ({len(self.checks)} checks, {self.seconds:.1f}s){extra}"

    def to_json(self):
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "seconds": round(self.seconds, 3), "error": self.error,
                "checks": [{"name": c.name, "ok": c.ok, "expected": repr(c.expected), "got": repr(c.got)}
                           for c in self.checks]}


def _falling(n):
    return UPoly.from_roots(range(n))


def _vandermonde(n):
    out = MPoly.const(1, n)
    for i, j in combinations(range(n), 2):
        out = out * (MPoly.var(j, n) - MPoly.var(i, n))
    return out


def braid_suite():
    from .logmodule import delta_p, saito_check

    out = []
    for n in (3, 4):
        A = ar.braid(n)
        L = build_lattice(A)
        out.append(Check(f"chi braid({n})", _falling(n), char_poly(L)))
        pi = UPoly([1])
        for k in range(1, n):
            pi = pi * UPoly([1, k])
        out.append(Check(f"poincare braid({n})", pi, poincare_poly(L)))
        out.append(Check(f"chambers braid({n})", math.factorial(n), chamber_count(L)))
        out.append(Check(f"F_5 count braid({n})", math.perm(5, n), fq_count(A, 5)))
        if n == 3:
            out.append(Check("F_5 enumeration braid(3)", math.perm(5, 3), fq_count(A, 5, mode="enumerate")))
        cert = saito_check(A, [delta_p(n, p) for p in range(n)])
        out.append(Check(f"saito determinant braid({n})", _vandermonde(n), cert.determinant))
        out.append(Check(f"exponents braid({n})", tuple(range(n)), cert.exponents))
    return out


def stanley_suite():
    from .curves import bezout_refutation
    from .logmodule import freeness_test, ziegler_coker_dim

    A = ar.stanley()
    out = [Check("chi stanley", UPoly.from_roots([1, 3, 3]), char_poly(A))]
    v = freeness_test(A)
    out.append(Check("verdict", "not_free", v.kind))
    out.append(Check("witness", "restriction exponents (1,5) != (3,3)", v.witness))
    z = ziegler_coker_dim(A, 0)
    out.append(Check("ziegler cokernel", 4, z.dim))
    e1, e2 = z.exponents
    out.append(Check("b_3 - e_1 e_2 (restriction exponents)", (9, (1, 5), 4), (betti(A, 3), (e1, e2), betti(A, 3) - e1 * e2)))
    ref = bezout_refutation(A, 0)
    out.append(Check("exponents if free", (1, 3, 3), ref.exponents))
    out.append(Check("line with 5 points vs cubic", [{"line": 1, "points": 5, "degree": 3}], ref.offending))
    return out


def extended_stanley_suite():
    from .curves import bezout_report, curve_pair
    from .logmodule import freeness_test, verify_certificate

    A = ar.stanley_extended()
    v = freeness_test(A)
    out = [Check("verdict", "free", v.kind), Check("exponents", (1, 2, 5), v.exponents),
           Check("certificate verifies", True, v.certificate is not None and verify_certificate(A, v.certificate))]
    pair = curve_pair(A, v.certificate, 0)
    out.append(Check("curve degrees", (2, 5), pair.degrees))
    out.append(Check("bezout sum", 10, sum(m for _, m in pair.points)))
    out.append(Check("mult = mu at every L_2 point", [P.mu for P, _ in pair.points], [m for _, m in pair.points]))
    rep = bezout_report(pair)
    out.append(Check("common zeros are L_2 exactly", (0, 0), (rep.extra_affine, rep.at_infinity)))
    out.append(Check("bezout report", True, rep.ok))
    return out


def catalan_suite():
    from .catalan import catalan_basis
    from .logmodule import addition_chain

    out = []
    for n, exps in ((2, (0, 1, 3)), (3, (0, 1, 4, 5))):
        cert = catalan_basis(n)
        out.append(Check(f"exponents Cat_{n}", exps, cert.exponents))
        Q = ar.catalan(n).defining_polynomial()
        out.append(Check(f"determinant = c Q(Cat_{n})", Q.scale(cert.saito.scalar), cert.saito.determinant))
    chain = addition_chain(ar.catalan(2))
    out.append(Check("addition-deletion chain Cat_2", (0, 1, 3), chain[-1].exponents))
    return out


def coxeter_multiplicity_suite():
    from .coxeter import constant_multiplicity_basis, make_typeA
    from .logmodule import saito_check
    from .solomonterao import fitted_exponents

    want = {(2, 2): (3, 3), (2, 3): (4, 5), (3, 2): (4, 4, 4), (3, 3): (5, 6, 7)}
    out = []
    for (ell, m), exps in want.items():
        C = make_typeA(ell)
        A = C.arrangement.with_mult(m)
        cert = saito_check(A, constant_multiplicity_basis(C, m))
        out.append(Check(f"A_{ell} m={m} via Psi", exps, cert.exponents))
        out.append(Check(f"A_{ell} m={m} via Hilbert fit", exps, fitted_exponents(A)))
    return out


def invariant_endpoint_suite():
    from .coxeter import invariant_module, is_invariant, make_typeA, nabla, primitive_derivation, rational_to_derivation

    out = []
    for ell, degs in ((2, (7, 8)), (3, (9, 10, 11))):
        C = make_typeA(ell)
        IB = invariant_module(C, 5)
        out.append(Check(f"A_{ell} m=5 generator degrees", degs, tuple(IB.degrees)))
        out.append(Check(f"A_{ell} degrees = e_i + 2h", tuple(e + 2 * C.h for e in C.exponents), tuple(IB.degrees)))
        D = primitive_derivation(C)
        A3 = C.arrangement.with_mult(3)
        good = []
        for g in IB.generators:
            r = nabla(D, g)
            d = rational_to_derivation(r) if r.is_polynomial() else None
            good.append(d is not None and d.is_member(A3) and is_invariant(C, d))
        out.append(Check(f"A_{ell} nabla_D D(A,5)^W in D(A,3)^W", [True] * ell, good))
    return out


def solomon_terao_suite():
    from .solomonterao import solomon_terao_chi

    out = []
    for name, A in (("braid(3)", ar.braid(3)), ("braid(4)", ar.braid(4)), ("boolean(3)", ar.boolean(3)),
                    ("stanley", ar.stanley())):
        out.append(Check(f"chi {name}", char_poly(A), solomon_terao_chi(A)))
    return out


def chern_suite():
    from .solomonterao import chern_check

    out = []
    for name, A, want in (("stanley", ar.stanley(), [1, -6, 9]), ("boolean(3)", ar.boolean(3), [1, -2, 1]),
                          ("stanley_extended", ar.stanley_extended(), [1, -7, 10])):
        rep = chern_check(A)
        out.append(Check(f"c_t {name}", want, rep.chern.int_coeffs()))
        out.append(Check(f"c_t = t^2 chi_0(1/t) {name}", True, rep.agrees))
    return out


def random_rank3(rng: random.Random, lo=4, hi=8, box=3):
    while True:
        k = rng.randint(lo, hi)
        covs = set()
        while len(covs) < k:
            c = tuple(rng.randint(-box, box) for _ in range(3))
            if any(c):
                covs.add(ar.canonical_covector(c))
        A = ar.make(3, sorted(covs))
        if A.rank == 3:
            return A


def corpus_arrangements():
    return {"braid(3)": ar.braid(3), "braid(4)": ar.braid(4), "boolean(3)": ar.boolean(3),
            "boolean(4)": ar.boolean(4), "stanley": ar.stanley(), "stanley_extended": ar.stanley_extended(),
            "catalan(2)": ar.catalan(2), "catalan(3)": ar.catalan(3)}


def property_suite(seed: int = 2024):
    from .catalan import F, fpi_decompose, reconstruct, symmetric_basis
    from .logmodule import freeness_test

    rng = random.Random(seed)
    out = []
    conserved = []
    for _ in range(20):
        A = random_rank3(rng)
        h = rng.randrange(A.size)
        R = ar.ziegler_restrict(A, h)
        conserved.append(R.ambient.size == A.size - 1)
    out.append(Check("Ziegler conservation on 20 random rank-3", [True] * 20, conserved))
    arrs = corpus_arrangements()
    for name, A in arrs.items():
        L = build_lattice(A)
        out.append(Check(f"moebius agreement {name}", L.moebius, moebius_by_zeta_inversion(L)))
    for name, A in arrs.items():
        v = freeness_test(A)
        if v.is_free:
            out.append(Check(f"free {name}: chi factors", UPoly.from_roots(v.exponents), char_poly(A)))
            out.append(Check(f"free {name}: sum e = |m|", A.size, sum(v.exponents)))
    trips = []
    for k in range(50):
        n = 2 + k % 2
        G = MPoly.zero(n)
        for _ in range(rng.randint(1, 3)):
            p, r, bd = rng.randint(0, 3), rng.randint(0, 2), rng.randint(0, 2)
            _, s = rng.choice(symmetric_basis(bd, n))
            G = G + s.scale(rng.randint(-5, 5) or 1) * F(p, r, n)
        if not G:
            trips.append(True)
            continue
        trips.append(reconstruct(fpi_decompose(G, n), n) == G)
    out.append(Check("fpi round trip on 50 random polynomials", [True] * 50, trips))
    return out


CRITERIA = [
    (1, "braid suite", braid_suite),
    (2, "Stanley non-freeness three ways", stanley_suite),
    (3, "extended Stanley: certificate and curves", extended_stanley_suite),
    (4, "Catalan bases", catalan_suite),
    (5, "Coxeter constant multiplicities, two ways", coxeter_multiplicity_suite),
    (6, "invariant generators at m = 5 and nabla_D", invariant_endpoint_suite),
    (7, "chi from the limit of Phi", solomon_terao_suite),
    (8, "Chern polynomial of D_0", chern_suite),
    (9, "property suites", property_suite),
]


def run_criterion(number: int) -> CriterionResult:
    num, title, fn = next(c for c in CRITERIA if c[0] == number)
    res = CriterionResult(num, title)
    t = time.perf_counter()
    try:
        res.checks = fn()
    except Exception as exc:  # a crash is a failed criterion, not a crashed run
        res.error = f"{type(exc).__name__}: {exc}"
    res.seconds = time.perf_counter() - t
    return res


def run_corpus(select=None):
    nums = [c[0] for c in CRITERIA] if not select else list(select)
    return [run_criterion(n) for n in nums]
