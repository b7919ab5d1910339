"""Hilbert series fitting, the two-variable series Phi and chi by the limit x -> 1."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exactmath import BiPoly, UPoly, dim_homogeneous, rat_str
from .logmodule import GradedDims, d0_piece, d_dim, omega_dim
from .logmodule.freeness import FitError

WINDOW = 3


@dataclass(frozen=True)
class HilbertRational:
    """numerator(x) / (1 - x)^ell, numerator Laurent."""

    numerator: UPoly
    ell: int

    def coefficient(self, d: int):
        """[x^d] of the series."""
        total = 0
        for k, c in self.numerator.as_dict().items():
            j = d - k
            if j >= 0:
                total += c * dim_homogeneous(self.ell, j)
        return total

    def hilbert_polynomial(self) -> UPoly:
        """Polynomial P with P(d) = coefficient(d) for every d >= deg numerator."""
        out = UPoly()
        ell = self.ell
        for k, c in self.numerator.as_dict().items():
            # binom(d - k + ell - 1, ell - 1) as a polynomial in d
            p = UPoly([1])
            for i in range(1, ell):
                p = p * UPoly([Fraction(-k + i, i), Fraction(1, i)])
            out = out + p * c
        return out

    def __str__(self):
        return f"({self.numerator.to_str('x')}) / (1 - x)^{self.ell}"


def _numerator_from_dims(dims: dict, ell: int) -> UPoly:
    lo, hi = min(dims), max(dims)
    # (1-x)^ell * sum dims_d x^d, truncated at x^hi
    out = {}
    for d in range(lo, hi + 1):
        v = dims[d]
        if not v:
            continue
        for j in range(ell + 1):
            if d + j > hi:
                break
            out[d + j] = out.get(d + j, 0) + v * (-1) ** j * comb(ell, j)
    return UPoly.from_dict(out)


def _stable(N: UPoly, hi: int, w: int) -> bool:
    return all(N.coeff(hi - i) == 0 for i in range(w))


def fit_hilbert(dims: GradedDims, ell: int, w: int = WINDOW) -> HilbertRational:
    """Numerator determined by dims; requires the top ``w`` numerator terms to vanish."""
    if not dims.dims:
        raise FitError("no graded dims to fit")
    lo, hi = dims.start, dims.cutoff
    if sorted(dims.dims) != list(range(lo, hi + 1)):
        raise FitError("graded dims must cover a contiguous window")
    N = _numerator_from_dims(dims.dims, ell)
    if not _stable(N, hi, w) or hi - lo + 1 < w:
        raise FitError(f"numerator not stable on window [{lo}, {hi}]: {N.to_str('x')}")
    H = HilbertRational(N, ell)
    for d, v in dims.dims.items():
        if H.coefficient(d) != v:
            raise FitError(f"fitted series disagrees with dim at degree {d}")
    return H


def fit_incremental(dim_fn, start: int, ell: int, cutoff: int, w: int = WINDOW, min_degree: int = 0, tag="",
                    accept=None):
    """Compute dims upward from ``start`` until the numerator stabilizes.

    ``accept(numerator)`` can veto an apparently stable numerator (for
    instance while all dims so far are zero).
    """
    dims = GradedDims(tag)
    for d in range(start, cutoff + 1):
        dims.dims[d] = dim_fn(d)
        if d >= min_degree + w - 1 and d - start + 1 >= w:
            N = _numerator_from_dims(dims.dims, ell)
            if _stable(N, d, w) and (accept is None or accept(N)):
                return fit_hilbert(dims, ell, w), dims
    raise FitError(f"{tag} numerator not stable on window [{start}, {cutoff}]")


def omega_hilbert(A, p: int, w: int = WINDOW, cutoff=None):
    ell = A.dim
    if cutoff is None:
        cutoff = A.size + ell + w
    return fit_incremental(lambda d: omega_dim(A, p, d), -A.size, ell, cutoff, w,
                           tag=f"Omega^{p}")


def _d_numerator_ok(A):
    # rank ell and first moment |m| hold for D(A, m) whether free or not
    def ok(N):
        return N(1) == A.dim and N.derivative()(1) == A.size
    return ok


def d_hilbert(A, w: int = WINDOW, cutoff=None):
    if cutoff is None:
        cutoff = A.size + A.dim + w
    return fit_incremental(lambda d: d_dim(A, d), 0, A.dim, cutoff, w, tag="D", accept=_d_numerator_ok(A))


def exponents_from_hilbert(H: HilbertRational):
    """Exponents if the numerator is sum x^(e_i) with nonnegative integer counts, else None."""
    out = []
    for k, c in sorted(H.numerator.as_dict().items()):
        if c < 0 or Fraction(c).denominator != 1:
            return None
        out += [k] * int(c)
    return tuple(out) if len(out) == H.ell else None


def fitted_exponents(A, w: int = WINDOW):
    """Exponents read off the fitted Hilbert series of D(A, m); None if it is not of free shape."""
    H, _ = d_hilbert(A.nonzero() if A.rank == A.dim else A, w)
    return exponents_from_hilbert(H)


@dataclass(frozen=True)
class PhiPolynomial:
    """Phi(x, y) = numerator(x, y) / (1 - x)^ell."""

    numerator: BiPoly
    ell: int

    def series(self, p: int) -> HilbertRational:
        return HilbertRational(self.numerator.y_coefficient(p), self.ell)

    def to_json(self):
        return [[i, j, rat_str(c)] for (i, j), c in self.numerator.sorted_terms()]


def phi_polynomial(A, w: int = WINDOW) -> PhiPolynomial:
    terms = {}
    for p in range(A.dim + 1):
        H, _ = omega_hilbert(A, p, w)
        for i, c in H.numerator.as_dict().items():
            terms[(i, p)] = c
    return PhiPolynomial(BiPoly(terms), A.dim)


def _one_minus_s_power(k: int, order: int):
    """Coefficients of (1 - s)^k up to s^order (k any integer)."""
    out = []
    c = Fraction(1)
    for j in range(order + 1):
        out.append(c)
        c = c * (k - j) / (j + 1) * -1
    return out


def limit_chi(phi: PhiPolynomial) -> UPoly:
    """lim_{x->1} Phi(x, t(1-x) - 1), via x = 1 - s.

    Phi becomes s^-ell * sum_p N_p(1-s) (ts - 1)^p; the coefficients of
    s^0..s^(ell-1) must cancel and the s^ell coefficient is chi.
    """
    ell = phi.ell
    coeffs = [UPoly() for _ in range(ell + 1)]
    for p in range(ell + 1):
        Np = phi.numerator.y_coefficient(p)
        ser = [UPoly() for _ in range(ell + 1)]
        for k, c in Np.as_dict().items():
            for j, b in enumerate(_one_minus_s_power(k, ell)):
                ser[j] = ser[j] + c * b
        # (ts - 1)^p
        fac = [UPoly.monomial(i, comb(p, i) * (-1) ** (p - i)) for i in range(p + 1)]
        for a in range(ell + 1):
            if ser[a].is_zero():
                continue
            for i in range(min(p, ell - a) + 1):
                coeffs[a + i] = coeffs[a + i] + ser[a] * fac[i]
    for j in range(ell):
        if not coeffs[j].is_zero():
            raise ArithmeticError(f"pole of order {ell - j} does not cancel: {coeffs[j]}")
    return coeffs[ell]


def solomon_terao_chi(A, mult=None, w: int = WINDOW) -> UPoly:
    if mult is not None:
        A = A.with_mult(mult)
    A = A.nonzero()
    chi = limit_chi(phi_polynomial(A, w))
    if chi.degree() != A.dim or chi.leading_coeff() != 1:
        raise ArithmeticError(f"limit {chi} is not monic of degree {A.dim}")
    return chi


def solomon_terao_report(A, w: int = WINDOW):
    from .lattice import char_poly

    phi = phi_polynomial(A.nonzero(), w)
    chi = limit_chi(phi)
    out = {"phi": phi.to_json(), "chi": chi.int_coeffs()}
    if A.is_simple:
        out["agrees_with_lattice"] = chi == char_poly(A)
    return out


# -- Chern classes of D_0 on the projective plane -----------------------------


@dataclass
class ChernReport:
    rank: int
    c1: object
    c2: object
    chern: UPoly
    expected: UPoly
    hilbert: HilbertRational

    @property
    def agrees(self):
        return self.rank == 2 and self.chern == self.expected

    def to_json(self):
        return {"rank": self.rank, "c1": rat_str(self.c1), "c2": rat_str(self.c2),
                "chern": self.chern.int_coeffs(), "expected": self.expected.int_coeffs(),
                "agrees": self.agrees}


def chern_from_hilbert_poly(P: UPoly):
    """(r, c1, c2) from chi(E(d)) = r(d^2+3d+2)/2 + c1(d+3/2) + (c1^2-2c2)/2."""
    a2, a1, a0 = (Fraction(P.coeff(i)) for i in (2, 1, 0))
    r = 2 * a2
    c1 = a1 - Fraction(3, 2) * r
    rest = a0 - r - Fraction(3, 2) * c1
    c2 = (c1 * c1 - 2 * rest) / 2
    if r.denominator != 1:
        raise ArithmeticError("non-integral rank")
    return int(r), c1, c2


def chern_check(A, h: int = 0, w: int = WINDOW) -> ChernReport:
    """Compare c_t of the sheaf of D_0(A) with t^2 chi_0(1/t), rank 3."""
    from .lattice import char_poly

    if A.dim != 3 or A.rank != 3 or not A.is_simple:
        raise ValueError("chern_check needs a simple essential rank-3 arrangement")
    H, dims = fit_incremental(lambda d: len(d0_piece(A, h, d)), 0, 3, A.size + 3 + w, w,
                              min_degree=A.size, tag="D_0")
    P = H.hilbert_polynomial()
    r, c1, c2 = chern_from_hilbert_poly(P)
    chern = UPoly([1, c1, c2])
    chi0, rem = char_poly(A).divmod(UPoly([-1, 1]))
    if not rem.is_zero():
        raise ArithmeticError("chi is not divisible by t - 1")
    cs = chi0.poly_coeffs() + [0] * 3
    expected = UPoly([cs[2], cs[1], cs[0]])
    return ChernReport(r, c1, c2, chern, expected, H)
