"""Graded pieces, Hilbert data and minimal generators."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from ..exactmath import Echelon, MPoly, dim_homogeneous
from .derivation import Derivation, LogForm
from .systems import derivation_rows, form_blocks, form_rows, polys_to_vector, vector_to_polys


def _override(A, mult):
    if mult is None:
        return A
    if isinstance(mult, int):
        mult = [mult] * len(A)
    return A.with_mult(mult)


def default_cutoff(A) -> int:
    env = os.environ.get("ARRKIT_MAX_DEGREE")
    if env:
        return int(env)
    return A.size


def d_echelon(A, d: int, extra=()):
    rows, ncols = derivation_rows(A, d)
    ech = Echelon(ncols)
    for r in rows:
        ech.add(r)
    for r in extra:
        ech.add(r)
    return ech


def d_graded_piece(A, d: int, mult=None) -> list:
    """Basis of D(A, m)_d, in echelon order over the coefficient space."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    A = _override(A, mult)
    ech = d_echelon(A, d)
    n = A.dim
    return [Derivation(vector_to_polys(v, n, d, n)) for v in ech.kernel()]


def d_dim(A, d: int, mult=None) -> int:
    if d < 0:
        return 0
    A = _override(A, mult)
    ech = d_echelon(A, d)
    return ech.ncols - ech.rank


def omega_echelon(A, p: int, d: int):
    rows, ncols = form_rows(A, p, d)
    ech = Echelon(ncols)
    for r in rows:
        ech.add(r)
    return ech


def _form_denominators(A):
    return tuple((A.hyperplanes[h], A.mult[h]) for h in A.active)


def omega_graded_piece(A, p: int, d: int, mult=None) -> list:
    """Basis of Omega^p(A, m)_d as forms eta / Q(A, m)."""
    A = _override(A, mult)
    n = A.dim
    if not 0 <= p <= n:
        raise ValueError("form degree out of range")
    N = d + A.size
    if N < 0:
        return []
    blocks = form_blocks(n, p)
    ech = omega_echelon(A, p, d)
    den = _form_denominators(A)
    out = []
    for v in ech.kernel():
        polys = vector_to_polys(v, n, N, len(blocks))
        out.append(LogForm(p, n, {I: f for I, f in zip(blocks, polys) if f}, den))
    return out


def omega_dim(A, p: int, d: int, mult=None) -> int:
    A = _override(A, mult)
    n = A.dim
    N = d + A.size
    if N < 0:
        return 0
    if p == 0:
        # no condition on functions beyond Q | numerator
        return dim_homogeneous(n, d) if d >= 0 else 0
    ech = omega_echelon(A, p, d)
    return ech.ncols - ech.rank


@dataclass
class GradedDims:
    tag: str
    dims: dict = field(default_factory=dict)

    @property
    def cutoff(self):
        return max(self.dims) if self.dims else None

    @property
    def start(self):
        return min(self.dims) if self.dims else None

    def as_list(self):
        return [(d, self.dims[d]) for d in sorted(self.dims)]


def d_dims(A, cutoff: int, mult=None, start: int = 0) -> GradedDims:
    A = _override(A, mult)
    return GradedDims(f"D({A.size})", {d: d_dim(A, d) for d in range(start, cutoff + 1)})


def omega_dims(A, p: int, cutoff: int, mult=None, start=None) -> GradedDims:
    A = _override(A, mult)
    if start is None:
        start = -A.size
    return GradedDims(f"Omega^{p}", {d: omega_dim(A, p, d) for d in range(start, cutoff + 1)})


def _times_vars(deriv: Derivation, n: int, d: int):
    """Vectors of x_j * deriv in the degree-d coefficient space."""
    out = []
    for j in range(n):
        xj = MPoly.var(j, n)
        out.append(polys_to_vector([c * xj for c in deriv.coeffs], n, d))
    return out


@dataclass
class Generators:
    degrees: list
    representatives: list
    dims: GradedDims


def minimal_generators(A, cutoff=None, mult=None) -> Generators:
    """New generators degree by degree: D_d modulo the span of x_j * D_{d-1}."""
    A = _override(A, mult)
    if cutoff is None:
        cutoff = default_cutoff(A)
    n = A.dim
    degrees, reps = [], []
    dims = GradedDims("D")
    prev: list = []
    for d in range(cutoff + 1):
        basis = d_graded_piece(A, d)
        dims.dims[d] = len(basis)
        M = dim_homogeneous(n, d)
        ech = Echelon(n * M)
        for b in prev:
            for v in _times_vars(b, n, d):
                ech.add(v)
        for b in basis:
            if ech.add(polys_to_vector(b.coeffs, n, d)):
                degrees.append(d)
                reps.append(b)
        prev = basis
    return Generators(degrees, reps, dims)


def free_dims(exponents, n: int, d: int) -> int:
    return sum(dim_homogeneous(n, d - e) for e in exponents if d >= e)
