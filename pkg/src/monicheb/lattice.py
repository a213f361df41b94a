"""Exact LLL under arbitrary positive-definite rational forms, witness
search over endpoint-vanishing sublattices, and the small-values
construction for conjugation-closed point sets.

All reduction arithmetic is exact (Fractions end to end); the only
approximate ingredient anywhere is the float heuristic that guesses
integer coefficients in the small-values assembly, and those guesses are
always re-verified with outward-rounded rational interval arithmetic.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .certify import Verdict, verify_witness, DEFAULT_PREFILTER_DEPTH
from .construct import pair_polynomial
from .farey import FareyPair
from .numpoly import IntPoly, Interval, Poly, RatPoly, poly_integrate_product


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric positive-definite rational matrix of inner products."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        d = len(rows)
        if any(len(row) != d for row in rows):
            raise ValueError("matrix must be square")
        for i in range(d):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("matrix must be symmetric")
        if not _pivots_positive(rows):
            raise ValueError("matrix is not positive definite")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def form(self, u, v) -> Fraction:
        """The bilinear form u^T G v for integer or rational vectors."""
        total = Fraction(0)
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            row = self.entries[i]
            total += ui * sum(row[j] * vj for j, vj in enumerate(v) if vj != 0)
        return total


def _pivots_positive(rows) -> bool:
    """Symmetric PD check: all pivots of unpivoted elimination are positive."""
    work = [list(r) for r in rows]
    d = len(work)
    for k in range(d):
        pivot = work[k][k]
        if pivot <= 0:
            return False
        for i in range(k + 1, d):
            factor = work[i][k] / pivot
            if factor == 0:
                continue
            for j in range(k, d):
                work[i][j] -= factor * work[k][j]
    return True


def gram_matrix(polys, interval: Interval) -> GramMatrix:
    """G_ij = integral of polys_i * polys_j over the interval, exact."""
    polys = list(polys)
    entries = [[Fraction(0)] * len(polys) for _ in polys]
    for i, p in enumerate(polys):
        for j in range(i + 1):
            value = poly_integrate_product(p, polys[j], interval)
            entries[i][j] = value
            entries[j][i] = value
    return GramMatrix(tuple(tuple(row) for row in entries))


@dataclass(frozen=True)
class ReductionResult:
    """LLL output: reduced form, unimodular transform, and GS data.

    Column j of U holds the coordinates of the j-th reduced vector in the
    original basis, so gram_reduced = U^T G U exactly.
    """

    gram_reduced: GramMatrix
    transform: tuple[tuple[int, ...], ...]
    mu: tuple[tuple[Fraction, ...], ...]
    delta: Fraction

    @property
    def dim(self) -> int:
        return self.gram_reduced.dim

    def basis_vector(self, j: int) -> tuple[int, ...]:
        return tuple(self.transform[i][j] for i in range(self.dim))


def lll_reduce(gram: GramMatrix, delta=Fraction(3, 4)) -> ReductionResult:
    """Lattice reduction of Z^d under the quadratic form given by gram.

    Exact-rational Gram-Schmidt with the classic size-reduction and
    Lovasz-exchange loop; swaps update the GS data in place through the
    standard two-row formulas.  The returned transform is unimodular by
    construction.
    """
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise ValueError("delta must lie in (1/4, 1)")
    d = gram.dim
    basis = [[int(i == j) for j in range(d)] for i in range(d)]
    mu = [[Fraction(0)] * d for _ in range(d)]
    norms = [Fraction(0)] * d  # squared GS lengths

    def recompute_row(i: int) -> None:
        inner = [Fraction(0)] * i
        for j in range(i):
            val = gram.form(basis[i], basis[j])
            for l in range(j):
                val -= mu[j][l] * inner[l]
            inner[j] = val
            mu[i][j] = val / norms[j]
        norms[i] = gram.form(basis[i], basis[i]) - sum(
            mu[i][j] * inner[j] for j in range(i)
        )
        if norms[i] <= 0:
            raise ValueError("form is not positive definite on the basis")

    for i in range(d):
        recompute_row(i)

    def size_reduce(k: int, j: int) -> None:
        if abs(mu[k][j]) > Fraction(1, 2):
            q = round(mu[k][j])
            basis[k] = [x - q * y for x, y in zip(basis[k], basis[j])]
            for l in range(j):
                mu[k][l] -= q * mu[j][l]
            mu[k][j] -= q

    k = 1
    while k < d:
        size_reduce(k, k - 1)
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            for j in range(k - 2, -1, -1):
                size_reduce(k, j)
            k += 1
        else:
            m = mu[k][k - 1]
            swapped_norm = norms[k] + m * m * norms[k - 1]
            mu[k][k - 1] = m * norms[k - 1] / swapped_norm
            norms[k] = norms[k - 1] * norms[k] / swapped_norm
            norms[k - 1] = swapped_norm
            basis[k], basis[k - 1] = basis[k - 1], basis[k]
            for j in range(k - 1):
                mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
            for i in range(k + 1, d):
                t = mu[i][k]
                mu[i][k] = mu[i][k - 1] - m * t
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]
            k = max(k - 1, 1)

    reduced = tuple(
        tuple(gram.form(basis[i], basis[j]) for j in range(d)) for i in range(d)
    )
    transform = tuple(tuple(basis[j][i] for j in range(d)) for i in range(d))
    mu_out = tuple(tuple(row) for row in mu)
    return ReductionResult(GramMatrix(reduced), transform, mu_out, delta)


def det_unimodular(transform) -> int:
    """Integer determinant (Bareiss) of a square integer matrix."""
    m = [list(row) for row in transform]
    d = len(m)
    sign = 1
    prev = 1
    for k in range(d - 1):
        if m[k][k] == 0:
            for swap in range(k + 1, d):
                if m[swap][k] != 0:
                    m[k], m[swap] = m[swap], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, d):
            for j in range(k + 1, d):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[d - 1][d - 1]


@dataclass(frozen=True)
class SearchBasis:
    """Basis (p, v, x v, ..., x**(n-3) v) for the degree-n witness coset.

    p hits 1/b_i**n at both endpoints and every other member vanishes
    there, so p plus any integer combination of the rest is a monic
    degree-n candidate with the same endpoint values.
    """

    pair: FareyPair
    n: int
    p: IntPoly
    v: IntPoly
    members: tuple[IntPoly, ...]


def build_search_basis(pair: FareyPair, n: int) -> SearchBasis:
    if n < 3:
        raise ValueError("search degree must be >= 3")
    p = pair_polynomial(pair, n, 1, 1)  # raises CongruenceError when n inadmissible
    v = IntPoly([-pair.a1, pair.b1]) * IntPoly([-pair.a2, pair.b2])
    members = [p] + [IntPoly.monomial(i) * v for i in range(n - 2)]
    return SearchBasis(pair, n, p, v, tuple(members))


def _gram_schmidt_polys(polys, interval: Interval) -> list[RatPoly]:
    """Exact GS orthogonalization of polynomials under the L2 form."""
    out: list[RatPoly] = []
    for p in polys:
        g = p.to_rat() if isinstance(p, IntPoly) else p
        for q in out:
            coeff = poly_integrate_product(g, q, interval) / poly_integrate_product(
                q, q, interval
            )
            g = g - coeff * q
        out.append(g)
    return out


def search_witness(
    pair: FareyPair,
    n: int,
    delta=Fraction(3, 4),
    radius: int = 1,
    strategy: str = "cvp",
    prefilter_depth: int = DEFAULT_PREFILTER_DEPTH,
) -> IntPoly | None:
    """Search the degree-n coset for a certified witness polynomial.

    Default strategy reduces the endpoint-vanishing sublattice under the
    interval L2 form, runs Babai's nearest plane against -p, and then
    tries integer offsets of magnitude <= radius around that center,
    ordered by quadratic-form length (lexicographic tie-break).  The
    "full" strategy instead reduces the whole basis including p and scans
    reduced vectors whose p-coordinate is +-1, mirroring the original
    reduce-then-scan computation.  Returns the first certified candidate.
    """
    basis = build_search_basis(pair, n)
    interval = pair.interval()

    def certified(f: IntPoly) -> bool:
        record = verify_witness(pair, f, prefilter_depth)
        return record.certificate.verdict is Verdict.CERTIFIED_AT_MOST

    if strategy == "full":
        red = lll_reduce(gram_matrix(basis.members, interval), delta)
        for j in range(red.dim):
            coords = red.basis_vector(j)
            if abs(coords[0]) != 1:
                continue
            f = IntPoly()
            for c, member in zip(coords, basis.members):
                f = f + c * member
            if coords[0] == -1:
                f = -f
            if certified(f):
                return f
        return None
    if strategy != "cvp":
        raise ValueError(f"unknown strategy: {strategy!r}")

    sub = basis.members[1:]
    dim = len(sub)
    red = lll_reduce(gram_matrix(sub, interval), delta)
    reduced_polys = []
    for j in range(dim):
        coords = red.basis_vector(j)
        poly = IntPoly()
        for c, member in zip(coords, sub):
            poly = poly + c * member
        reduced_polys.append(poly)

    # Babai nearest plane toward -p.
    gs = _gram_schmidt_polys(reduced_polys, interval)
    residual = -basis.p.to_rat()
    center = [0] * dim
    for i in range(dim - 1, -1, -1):
        coeff = poly_integrate_product(residual, gs[i], interval) / (
            poly_integrate_product(gs[i], gs[i], interval)
        )
        q = round(coeff)
        center[i] = q
        residual = residual - q * reduced_polys[i].to_rat()

    def offset_key(off):
        return (red.gram_reduced.form(off, off), off)

    for off in sorted(
        itertools.product(range(-radius, radius + 1), repeat=dim), key=offset_key
    ):
        f = basis.p
        for i in range(dim):
            c = center[i] + off[i]
            if c:
                f = f + c * reduced_polys[i]
        if certified(f):
            return f
    return None


class SmallValueError(ArithmeticError):
    """Verification failed at the given precision; raise it and retry."""


@dataclass(frozen=True)
class _Box:
    """Axis-aligned complex box with exact rational corners."""

    rl: Fraction
    rh: Fraction
    il: Fraction
    ih: Fraction

    @classmethod
    def point(cls, re: Fraction, im: Fraction, halfwidth: Fraction) -> "_Box":
        return cls(re - halfwidth, re + halfwidth, im - halfwidth, im + halfwidth)

    @classmethod
    def integer(cls, c: int) -> "_Box":
        z = Fraction(0)
        return cls(Fraction(c), Fraction(c), z, z)

    def round_out(self, precision: int) -> "_Box":
        scale = 1 << precision
        return _Box(
            Fraction(math.floor(self.rl * scale), scale),
            Fraction(math.ceil(self.rh * scale), scale),
            Fraction(math.floor(self.il * scale), scale),
            Fraction(math.ceil(self.ih * scale), scale),
        )

    def __add__(self, other: "_Box") -> "_Box":
        return _Box(
            self.rl + other.rl,
            self.rh + other.rh,
            self.il + other.il,
            self.ih + other.ih,
        )

    def __sub__(self, other: "_Box") -> "_Box":
        return _Box(
            self.rl - other.rh,
            self.rh - other.rl,
            self.il - other.ih,
            self.ih - other.il,
        )

    def __mul__(self, other: "_Box") -> "_Box":
        rr = _mul_interval(self.rl, self.rh, other.rl, other.rh)
        ii = _mul_interval(self.il, self.ih, other.il, other.ih)
        ri = _mul_interval(self.rl, self.rh, other.il, other.ih)
        ir = _mul_interval(self.il, self.ih, other.rl, other.rh)
        return _Box(rr[0] - ii[1], rr[1] - ii[0], ri[0] + ir[0], ri[1] + ir[1])

    def abs2_upper(self) -> Fraction:
        return max(self.rl**2, self.rh**2) + max(self.il**2, self.ih**2)

    def abs2_lower(self) -> Fraction:
        re2 = Fraction(0) if self.rl <= 0 <= self.rh else min(self.rl**2, self.rh**2)
        im2 = Fraction(0) if self.il <= 0 <= self.ih else min(self.il**2, self.ih**2)
        return re2 + im2


def _mul_interval(a: Fraction, b: Fraction, c: Fraction, d: Fraction):
    products = (a * c, a * d, b * c, b * d)
    return min(products), max(products)


def _box_eval(poly: IntPoly, box: _Box, precision: int) -> _Box:
    acc = _Box.integer(0)
    for c in reversed(poly.coeffs):
        acc = (acc * box + _Box.integer(c)).round_out(precision)
    return acc


def _eval_complex(poly: IntPoly, z: complex) -> complex:
    acc = 0j
    for c in reversed(poly.coeffs):
        acc = acc * z + c
    return acc


def _to_exact_complex(value) -> tuple[Fraction, Fraction]:
    if isinstance(value, complex):
        return Fraction(value.real), Fraction(value.imag)
    return Fraction(value), Fraction(0)


def _small_value_candidates(reps, degree: int, weight: int, delta=Fraction(3, 4)):
    """Integer polynomials with small values at the representatives.

    Reduces the scaled linear-forms lattice: vectors a in Z^(degree+1)
    weighted by identity plus weight**2 times the squared forms
    Re/Im sum(a_j alpha**j), one or two forms per representative.
    """
    forms = []
    for re, im in reps:
        row_re, row_im = [], []
        pr, pi = Fraction(1), Fraction(0)  # alpha**j, exact center powers
        for _ in range(degree + 1):
            row_re.append(pr)
            row_im.append(pi)
            pr, pi = pr * re - pi * im, pr * im + pi * re
        forms.append(row_re)
        if im != 0:
            forms.append(row_im)
    dim = degree + 1
    w2 = Fraction(weight) ** 2
    entries = [
        [
            Fraction(int(i == j)) + w2 * sum(f[i] * f[j] for f in forms)
            for j in range(dim)
        ]
        for i in range(dim)
    ]
    red = lll_reduce(GramMatrix(tuple(tuple(r) for r in entries)), delta)
    for j in range(red.dim):
        yield IntPoly(red.basis_vector(j))


def _solve_amounts(values: list[complex], rhs: list[complex]) -> list[float] | None:
    """Solve sum_j A_j v_i**j = rhs_i for real A (float heuristic, m <= 2)."""
    m = len(values)
    if m == 1:
        v = values[0]
        if v == 0:
            return None
        return [(rhs[0] / v).real]
    v1, v2 = values
    det = v1 * v2**2 - v2 * v1**2
    if det == 0:
        return None
    a1 = (rhs[0] * v2**2 - rhs[1] * v1**2) / det
    a2 = (v1 * rhs[1] - v2 * rhs[0]) / det
    return [a1.real, a2.real]


def _assemble_small_poly(
    q_poly: IntPoly, boxes, reps_boxes, reps_centers, eps: Fraction, k: int, precision: int
) -> IntPoly | None:
    """Assemble F = x**n + sum_j b_j P(x)**j with P = x**shift * Q."""
    for shift in range(k * (k - 1) // 2 + 2):
        p_poly = IntPoly.monomial(shift) * q_poly if shift else q_poly
        rep_values = [_box_eval(p_poly, b, precision) for b in reps_boxes]
        if len(rep_values) == 2:
            diff = rep_values[0] - rep_values[1]
            if diff.abs2_lower() == 0:
                continue  # cannot prove the values distinct; try next shift
        m = len(rep_values)
        centers = [complex(float(re), float(im)) for re, im in reps_centers]
        value_mids = [_eval_complex(p_poly, z) for z in centers]
        n_base = max(k * k * (k + 1) // 2, m * max(p_poly.degree, 1)) + 1
        powers = [p_poly**j for j in range(1, m + 1)]
        for n in range(n_base, n_base + 3):
            rhs = [-(z**n) for z in centers]
            amounts = _solve_amounts(value_mids, rhs)
            if amounts is None:
                continue
            floors = [math.floor(a) for a in amounts]
            for bump in itertools.product((0, 1), repeat=m):
                coeffs = [f + d for f, d in zip(floors, bump)]
                f_poly = IntPoly.monomial(n)
                for b_j, p_pow in zip(coeffs, powers):
                    if b_j:
                        f_poly = f_poly + b_j * p_pow
                if not f_poly.is_monic or f_poly.degree != n:
                    continue
                if all(
                    _box_eval(f_poly, box, precision).abs2_upper() < eps * eps
                    for box in boxes
                ):
                    return f_poly
    return None


def small_value_polynomial(points, epsilon, precision: int = 64) -> IntPoly:
    """Monic integer F with |F(alpha_i)| < epsilon at every given point.

    Points must be pairwise distinct and closed under complex conjugation;
    the success criterion is verified with outward-rounded interval
    arithmetic at the given precision (each point is enclosed in a box of
    halfwidth 2**-precision, so the inputs are trusted to that accuracy).
    Raises SmallValueError when no candidate verifies; callers should then
    raise the precision or supply more accurate points.
    """
    eps = Fraction(epsilon)
    if not 0 < eps < 1:
        raise ValueError("epsilon must lie strictly between 0 and 1")
    exact = [_to_exact_complex(p) for p in points]
    k = len(exact)
    if k == 0:
        raise ValueError("need at least one point")
    if len(set(exact)) != k:
        raise ValueError("points must be pairwise distinct")
    as_set = set(exact)
    for re, im in exact:
        if im != 0 and (re, -im) not in as_set:
            raise ValueError("points must be closed under complex conjugation")

    halfwidth = Fraction(1, 1 << precision)
    boxes = [_Box.point(re, im, halfwidth) for re, im in exact]
    reps = [(re, im) for re, im in exact if im >= 0]
    reps_boxes = [_Box.point(re, im, halfwidth) for re, im in reps]
    target = eps / (2 * k)

    for degree in range(k, k + 8):
        for wexp in (12, 24, 48, 96):
            for q_poly in _small_value_candidates(reps, degree, 1 << wexp):
                values = [_box_eval(q_poly, box, precision) for box in boxes]
                # A monic candidate that already meets the target is itself
                # a valid answer (covers degenerate low-height inputs where
                # no strictly-nonzero small form exists).
                if (
                    q_poly.is_monic
                    and q_poly.degree >= 1
                    and all(v.abs2_upper() < eps * eps for v in values)
                ):
                    return q_poly
                if any(
                    v.abs2_lower() == 0 or v.abs2_upper() >= target * target
                    for v in values
                ):
                    continue
                result = _assemble_small_poly(
                    q_poly, boxes, reps_boxes, reps, eps, k, precision
                )
                if result is not None:
                    return result
    raise SmallValueError(
        "could not verify a small-value polynomial at this precision"
    )
