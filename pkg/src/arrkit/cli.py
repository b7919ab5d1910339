"""Command-line front end: ``arrkit <verb> [arrangement] [options]``."""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from dataclasses import dataclass

from . import arrangement as ar
from .exactmath import rat_str

VERBS = ("info", "charpoly", "poincare", "chambers", "fqcount", "hilbert", "saito", "freeness", "restrict",
         "addel", "solomon-terao", "chern", "coxeter", "catalan", "curves", "corpus")

_FIXTURES = {
    "braid": ar.braid, "boolean": ar.boolean, "catalan": ar.catalan,
    "stanley": lambda: ar.stanley(), "stanley_extended": lambda: ar.stanley_extended(),
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    verb: str
    inputs: list
    max_degree: int = None
    fmt: str = "text"
    enum_budget: int = 10 ** 6
    degree_budget: int = None
    group_budget: int = 120

    def __post_init__(self):
        for name in ("max_degree", "enum_budget", "group_budget"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise UsageError(f"--{name.replace('_', '-')} must be positive")


def load_arrangement(spec: str, mult=None):
    """A path to an .arr file, or a fixture name such as braid3, catalan2, stanley."""
    if os.path.exists(spec):
        try:
            A = ar.read_arr(spec)
        except ar.ArrangementError as exc:
            raise UsageError(f"{spec}: {exc}") from exc
    else:
        m = re.fullmatch(r"([a-z_]+?)(\d*)", spec.removesuffix(".arr"))
        if not m or m.group(1) not in _FIXTURES:
            raise UsageError(f"no such file or fixture: {spec}")
        name, num = m.groups()
        try:
            A = _FIXTURES[name](int(num)) if num else _FIXTURES[name]()
        except TypeError:
            raise UsageError(f"fixture {name} needs a size, e.g. {name}3") from None
    if mult:
        ks = [int(k) for k in mult.split(",")]
        try:
            A = A.with_mult(ks[0] if len(ks) == 1 else ks)
        except ar.ArrangementError as exc:
            raise UsageError(str(exc)) from exc
    return A


def _need(cfg, n=1):
    if len(cfg.inputs) < n:
        raise UsageError(f"{cfg.verb} needs an arrangement (file or fixture)")
    return cfg.inputs


def _arr(cfg, args):
    return load_arrangement(_need(cfg)[0], getattr(args, "mult", None))


# -- verbs ---------------------------------------------------------------------


def do_info(cfg, args):
    from .lattice import build_lattice, char_poly

    A = _arr(cfg, args)
    L = build_lattice(A)
    out = {"dim": A.dim, "rank": A.rank, "size": A.size, "simple": A.is_simple,
           "hyperplanes": [list(c) for c in A.hyperplanes], "mult": list(A.mult),
           "flats_per_codim": L.counts(), "chi": char_poly(L).int_coeffs()}
    text = "\n".join([f"dim {A.dim}, rank {A.rank}, |m| = {A.size}, simple = {A.is_simple}",
                      f"flats per codimension: {L.counts()}",
                      f"chi = {char_poly(L)}"])
    return out, text


def do_charpoly(cfg, args):
    from .lattice import char_poly

    chi = char_poly(_arr(cfg, args))
    return {"chi": chi.int_coeffs(), "text": chi.to_str("t")}, chi.to_str("t")


def do_poincare(cfg, args):
    from .lattice import poincare_poly

    pi = poincare_poly(_arr(cfg, args))
    return {"poincare": pi.int_coeffs(), "text": pi.to_str("t")}, pi.to_str("t")


def do_chambers(cfg, args):
    from .lattice import chamber_count

    n = chamber_count(_arr(cfg, args))
    return {"chambers": n}, str(n)


def do_fqcount(cfg, args):
    from .lattice import fq_count, good_reduction

    A = _arr(cfg, args)
    mode = "enumerate" if args.enumerate else "formula"
    n = fq_count(A, args.q, mode=mode, budget=cfg.enum_budget)
    out = {"q": args.q, "mode": mode, "count": n, "good_reduction": good_reduction(A, args.q)}
    return out, f"{n} points of F_{args.q}^{A.dim} off the arrangement ({mode})"


def do_hilbert(cfg, args):
    from .solomonterao import d_hilbert, exponents_from_hilbert, omega_hilbert

    A = _arr(cfg, args).nonzero()
    if args.forms is None:
        H, dims = d_hilbert(A, cutoff=cfg.max_degree)
        tag = "D"
    else:
        H, dims = omega_hilbert(A, args.forms, cutoff=cfg.max_degree)
        tag = f"Omega^{args.forms}"
    out = {"module": tag, "numerator": {str(k): rat_str(v) for k, v in H.numerator.as_dict().items()},
           "ell": H.ell, "dims": {str(k): v for k, v in dims.dims.items()}}
    if tag == "D":
        e = exponents_from_hilbert(H)
        out["free_shape_exponents"] = list(e) if e else None
    text = f"Hilb({tag}; x) = {H}\ndims {dims.as_list()}"
    return out, text


def do_saito(cfg, args):
    from .logmodule import certificate_from_json, freeness_test, verify_certificate

    A = _arr(cfg, args)
    if args.cert:
        with open(args.cert) as fh:
            data = json.load(fh)
        cert = certificate_from_json(data, A.dim)
        ok = verify_certificate(A, cert)
        if not ok:
            raise ArithmeticError("certificate verification failed")
        return {"verified": True, "exponents": list(cert.exponents)}, f"certificate verified, exponents {cert.exponents}"
    v = freeness_test(A, cfg.max_degree)
    if not v.is_free:
        raise ArithmeticError(f"no Saito basis: {v.witness or v.reason}")
    c = v.certificate.to_json()
    return c, "\n".join([f"exponents {tuple(c['exponents'])}", f"det = {c['scalar']} * Q"]
                        + [f"  theta_{i + 1} = ({', '.join(b)})" for i, b in enumerate(c["basis"])])


def do_freeness(cfg, args):
    from .logmodule import freeness_test

    v = freeness_test(_arr(cfg, args), cfg.max_degree)
    out = v.to_json()
    if v.is_free:
        text = f"free, exponents {v.exponents} ({v.method})"
    elif v.kind == "not_free":
        text = f"not free: {v.witness} ({v.method})"
    else:
        text = f"unknown: {v.reason}"
    return out, text


def do_restrict(cfg, args):
    A = _arr(cfg, args)
    R = ar.ziegler_restrict(A, args.hyperplane) if args.ziegler else ar.restrict(A, args.hyperplane)
    B = R.ambient
    out = {"hyperplane": args.hyperplane, "dim": B.dim, "hyperplanes": [list(c) for c in B.hyperplanes],
           "mult": list(B.mult), "origin": [list(o) for o in R.origin_map], "arr": ar.to_arr(B)}
    if args.ziegler and B.rank <= 2:
        from .logmodule import rank2_exponents

        out["exponents"] = list(rank2_exponents(B))
    text = ar.to_arr(B).rstrip() + (f"\n# exponents {tuple(out['exponents'])}" if "exponents" in out else "")
    return out, text


def do_addel(cfg, args):
    from .logmodule import addition_deletion

    rec = addition_deletion(_arr(cfg, args), args.hyperplane)
    out = rec.to_json()
    lines = [f"{k}: {tuple(v) if v else 'not free / unknown'}" for k, v in rec.exponents.items()]
    lines.append(f"verdict {rec.verdict}" + (f", {rec.inferred} inferred from {' and '.join(rec.used)}"
                                              if rec.inferred else ""))
    return out, "\n".join(lines)


def do_solomon_terao(cfg, args):
    from .solomonterao import solomon_terao_report

    A = _arr(cfg, args)
    rep = solomon_terao_report(A)
    chi = rep["chi"]
    from .exactmath import UPoly

    text = f"lim Phi = {UPoly(chi).to_str('t')}"
    if "agrees_with_lattice" in rep:
        text += f"  (lattice agrees: {rep['agrees_with_lattice']})"
    return rep, text


def do_chern(cfg, args):
    from .solomonterao import chern_check

    rep = chern_check(_arr(cfg, args), args.hyperplane)
    text = (f"rank {rep.rank}, c_t = {rep.chern.to_str('t')}, "
            f"t^2 chi_0(1/t) = {rep.expected.to_str('t')}, agrees: {rep.agrees}")
    if not rep.agrees:
        raise ArithmeticError(text)
    return rep.to_json(), text


def do_coxeter(cfg, args):
    from .coxeter import constant_multiplicity_basis, invariant_module, make_typeA
    from .logmodule import saito_check

    C = make_typeA(args.ell)
    method = args.projector
    if method == "reynolds" and math.factorial(args.ell + 1) > cfg.group_budget:
        raise ArithmeticError(f"|W| = {math.factorial(args.ell + 1)} exceeds the group budget {cfg.group_budget}")
    out = {"coxeter": C.to_json(), "degrees": list(C.degrees), "exponents": list(C.exponents)}
    lines = [f"A_{C.ell}: h = {C.h}, degrees {C.degrees}, P = {[P.to_str() for P in C.invariants]}",
             f"Jacobian = {rat_str(C.scalar)} * Q"]
    if args.mult is not None:
        m = args.mult
        if m % 2 and args.invariant:
            IB = invariant_module(C, m, method=method)
            out["invariant"] = IB.to_json()
            lines.append(f"D(A,{m})^W generators in degrees {IB.degrees}")
        cert = saito_check(C.arrangement.with_mult(m), constant_multiplicity_basis(C, m))
        out["basis"] = cert.to_json()
        lines.append(f"D(A,{m}) free with exponents {cert.exponents}")
    return out, "\n".join(lines)


def do_catalan(cfg, args):
    from .catalan import catalan_basis

    cert = catalan_basis(args.n, allow_large=args.allow_large)
    out = cert.to_json()
    text = f"Cat_{args.n}: exponents {cert.exponents}, det = {rat_str(cert.saito.scalar)} * Q"
    if args.action == "verify":
        from .logmodule import verify_certificate

        ok = verify_certificate(ar.catalan(args.n), cert.saito)
        out["verified"] = ok
        if not ok:
            raise ArithmeticError("Catalan certificate failed to re-verify")
        text += ", verified"
    return out, text


def do_curves(cfg, args):
    from .curves import bezout_refutation, bezout_report, curve_pair
    from .logmodule import freeness_test

    A = _arr(cfg, args)
    v = freeness_test(A, cfg.max_degree)
    if not v.is_free:
        ref = bezout_refutation(A, args.pivot)
        out = {"verdict": v.kind, "refutation": ref.to_json()}
        text = "\n".join([f"not free; if free the exponents would be {ref.exponents}"]
                         + [f"line H_{b['line']} carries {b['points']} points of L_2 > degree {b['degree']}"
                            for b in ref.offending])
        return out, text
    pair = curve_pair(A, v.certificate, args.pivot, tuple(args.alpha) if args.alpha else None)
    rep = bezout_report(pair)
    out = pair.to_json()
    out["bezout"] = rep.to_json()
    lines = [f"alpha = {pair.alpha}", f"C1: {out['c1']} = 0", f"C2: {out['c2']} = 0"]
    lines += [f"  p = ({', '.join(p['p'])}): mu {p['mu']}, mult {p['mult']}" for p in out["points"]]
    lines.append(f"sum of multiplicities {out['bezout_sum']} = {pair.degrees[0]}*{pair.degrees[1]}, ok: {rep.ok}")
    if not rep.ok:
        raise ArithmeticError("\n".join(lines))
    return out, "\n".join(lines)


def do_corpus(cfg, args):
    from .corpus import run_corpus

    select = [int(s) for s in args.only.split(",")] if args.only else None
    results = run_corpus(select)
    out = {"results": [r.to_json() for r in results], "passed": all(r.passed for r in results)}
    text = "\n".join(r.line() for r in results)
    if not out["passed"]:
        return out, text, 1
    return out, text


HANDLERS = {v: globals()["do_" + v.replace("-", "_")] for v in VERBS}


def build_parser():
    # global options are accepted before or after the verb
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--max-degree", type=int, default=argparse.SUPPRESS,
                        help="degree budget (overrides ARRKIT_MAX_DEGREE)")
    common.add_argument("--enum-budget", type=int, default=argparse.SUPPRESS, help="max points for F_q enumeration")
    common.add_argument("--group-budget", type=int, default=argparse.SUPPRESS,
                        help="max group order for Reynolds averaging")
    p = argparse.ArgumentParser(prog="arrkit", description="Exact invariants of hyperplane (multi)arrangements.",
                                parents=[common])
    sub = p.add_subparsers(dest="verb", required=True)
    arr_verbs = {"info", "charpoly", "poincare", "chambers", "fqcount", "hilbert", "saito", "freeness",
                 "restrict", "addel", "solomon-terao", "chern", "curves"}
    for v in VERBS:
        s = sub.add_parser(v, parents=[common])
        if v in arr_verbs:
            s.add_argument("input", help=".arr file or fixture (braid3, boolean3, catalan2, stanley, ...)")
            s.add_argument("--mult", help="multiplicity: one integer or a comma list")
        if v == "fqcount":
            s.add_argument("--q", type=int, default=5)
            s.add_argument("--enumerate", action="store_true")
        elif v == "hilbert":
            s.add_argument("--forms", type=int, help="fit Omega^p instead of D")
        elif v == "saito":
            s.add_argument("--cert", help="JSON certificate to re-verify")
        elif v in ("restrict", "addel"):
            s.add_argument("--hyperplane", type=int, default=0)
            if v == "restrict":
                s.add_argument("--ziegler", action="store_true")
        elif v == "chern":
            s.add_argument("--hyperplane", type=int, default=0)
        elif v == "curves":
            s.add_argument("--pivot", type=int, default=0)
            s.add_argument("--alpha", type=int, nargs=2)
        elif v == "coxeter":
            s.add_argument("--ell", type=int, default=2)
            s.add_argument("--mult", type=int)
            s.add_argument("--invariant", action="store_true", help="also list D(A,m)^W generators (m odd)")
            s.add_argument("--projector", choices=("linear", "reynolds"), default="linear")
        elif v == "catalan":
            s.add_argument("action", nargs="?", choices=("basis", "verify"), default="basis")
            s.add_argument("--n", type=int, default=2)
            s.add_argument("--allow-large", action="store_true")
        elif v == "corpus":
            s.add_argument("--only", help="comma list of criterion numbers")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        opts = vars(args)
        max_degree = opts.get("max_degree")
        cfg = RunConfig(args.verb, [args.input] if hasattr(args, "input") else [], max_degree,
                        "json" if opts.get("json") else "text", opts.get("enum_budget", 10 ** 6), max_degree,
                        opts.get("group_budget", 120))
        if cfg.max_degree is not None:
            os.environ["ARRKIT_MAX_DEGREE"] = str(cfg.max_degree)
        res = HANDLERS[cfg.verb](cfg, args)
    except UsageError as exc:
        print(f"arrkit: usage error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        print(f"arrkit: {args.verb} failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    out, text, *code = res
    if cfg.fmt == "json":
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print(text)
    return code[0] if code else 0


if __name__ == "__main__":
    sys.exit(main())
