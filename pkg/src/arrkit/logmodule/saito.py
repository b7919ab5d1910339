"""Saito's criterion: n members of D(A, m) whose determinant is c * Q(A, m)."""

from __future__ import annotations

from dataclasses import dataclass

from ..exactmath import MPoly, det_poly, mpoly_divides, norm, rat_str
from .derivation import Derivation, MembershipError


class SaitoError(ValueError):
    pass


class NonMemberError(SaitoError, MembershipError):
    pass


class ZeroDeterminantError(SaitoError):
    pass


class ProperMultipleError(SaitoError):
    """det is Q times a non-constant, or not a multiple of Q at all."""


@dataclass(frozen=True)
class SaitoCertificate:
    basis: tuple
    determinant: MPoly
    scalar: object
    exponents: tuple

    def to_json(self):
        return {
            "exponents": list(self.exponents),
            "basis": [d.to_strs() for d in self.basis],
            "determinant": self.determinant.to_str(),
            "scalar": rat_str(self.scalar),
        }


def saito_check(A, candidates, mult=None) -> SaitoCertificate:
    A = A if mult is None else A.with_mult(mult)
    n = A.dim
    cands = list(candidates)
    if len(cands) != n:
        raise SaitoError(f"need {n} derivations, got {len(cands)}")
    for i, c in enumerate(cands):
        if c.nvars != n:
            raise SaitoError(f"candidate {i} lives in {c.nvars} variables, expected {n}")
        if not c.is_member(A):
            raise NonMemberError(f"candidate {i} is not in D(A, m)")
    det = det_poly([[c.coeffs[j] for j in range(n)] for c in cands])
    if not det:
        raise ZeroDeterminantError("determinant is zero")
    Q = A.defining_polynomial()
    ok, q = mpoly_divides(Q, det)
    if not ok:
        raise ProperMultipleError("determinant is not a multiple of Q(A, m)")
    if not q.is_constant():
        raise ProperMultipleError(f"determinant is Q times the non-constant {q.to_str()}")
    exps = tuple(sorted(c.degree for c in cands))
    if sum(exps) != A.size:
        raise AssertionError("exponent sum differs from |m| on a valid certificate")
    return SaitoCertificate(tuple(cands), det, norm(q.constant_value()), exps)


def verify_certificate(A, cert: SaitoCertificate) -> bool:
    try:
        again = saito_check(A, cert.basis)
    except SaitoError:
        return False
    return again.determinant == cert.determinant and again.exponents == tuple(cert.exponents)


def certificate_from_json(data, nvars: int) -> SaitoCertificate:
    from ..exactmath import parse_mpoly, parse_rat

    basis = tuple(Derivation([parse_mpoly(s, nvars) for s in row]) for row in data["basis"])
    return SaitoCertificate(
        basis,
        parse_mpoly(data["determinant"], nvars),
        norm(parse_rat(str(data["scalar"]))),
        tuple(data["exponents"]),
    )
