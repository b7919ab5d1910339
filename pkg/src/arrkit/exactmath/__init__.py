"""Exact arithmetic substrate: rationals, polynomials, linear algebra."""

from .rational import Rat, as_rat, norm, parse_rat, rat_str
from .mpoly import MPoly, dim_homogeneous, monomial_index, monomials, parse_mpoly
from .upoly import BiPoly, UPoly
from .linalg import Echelon, RatMatrix, bareiss_det, det_poly, nullspace, sparse_rank


def rref(m: RatMatrix):
    return m.rref()


def kernel_basis(m: RatMatrix):
    return m.kernel_basis()


def det(m: RatMatrix):
    return m.det()


def mpoly_divides(d: MPoly, f: MPoly):
    """(True, q) when f == d*q exactly, else (False, None)."""
    q, r = f.divmod(d)
    if r:
        return False, None
    return True, q


__all__ = [
    "Rat", "as_rat", "norm", "parse_rat", "rat_str",
    "MPoly", "dim_homogeneous", "monomial_index", "monomials", "parse_mpoly",
    "BiPoly", "UPoly",
    "Echelon", "RatMatrix", "bareiss_det", "det_poly", "nullspace", "sparse_rank",
    "rref", "kernel_basis", "det", "mpoly_divides",
]
