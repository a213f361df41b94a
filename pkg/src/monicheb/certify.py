"""Rigorous decisions about polynomial sup norms on rational intervals.

The authoritative decision is algebraic: the bound |f| <= B holds on
[lo, hi] iff h = B**2 - f**2 is nonnegative there, which reduces to a
root count of the odd-multiplicity part of h (Sturm sequences over exact
rationals) plus finitely many exact sign evaluations.  Equality points,
where the witness attains its bound, are even-multiplicity touch points
of h and are permitted by construction; no epsilon padding anywhere.

A Bernstein-coefficient subdivision prefilter runs first as a cheap
sufficient check; it is sound but incomplete, and the Sturm decision is
the fallback.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .constants import ConstantValue
from .farey import FareyPair
from .numpoly import (
    IntPoly,
    Interval,
    Poly,
    RatPoly,
    as_ratpoly,
    bernstein_split,
    format_rational,
    poly_gcd,
    to_bernstein,
)

DEFAULT_PREFILTER_DEPTH = 12


class Verdict(Enum):
    CERTIFIED_AT_MOST = "certified"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class NormCertificate:
    """Machine-checkable verdict that sup |f| on an interval is <= bound."""

    verdict: Verdict
    bound: Fraction
    method: str  # "sturm" or "bernstein"
    refutation_point: Fraction | None = None
    depth: int = 0

    def render(self) -> list[str]:
        lines = [
            f"status={self.verdict.value}",
            f"bound={format_rational(self.bound)}",
            f"method={self.method}",
        ]
        if self.refutation_point is not None:
            lines.append(f"refutation_point={format_rational(self.refutation_point)}")
        return lines


def _squarefree_factors(h: RatPoly) -> list[RatPoly]:
    """Yun decomposition: returns monic f_1, f_2, ... with h ~ prod f_i**i."""
    h = h.monic()
    dh = h.derivative()
    g = poly_gcd(h, dh)
    if g.degree == 0:
        return [h]
    b, rb = divmod(h, g)
    c, rc = divmod(dh, g)
    assert not rb and not rc
    d = c - b.derivative()
    factors: list[RatPoly] = []
    while b.degree > 0:
        f = poly_gcd(b, d)
        factors.append(f)
        b, rb = divmod(b, f)
        assert not rb
        c, rc = divmod(d, f)
        assert not rc
        d = c - b.derivative()
    return factors


def _odd_multiplicity_part(h: RatPoly) -> RatPoly:
    """Product of the odd-exponent squarefree factors of h (monic)."""
    out = RatPoly([1])
    for idx, f in enumerate(_squarefree_factors(h)):
        if (idx + 1) % 2 == 1:
            out = out * f
    return out.monic()


def _sturm_chain(g: RatPoly) -> list[IntPoly]:
    """Signed remainder sequence, content-stripped to primitive integers.

    Positive rescaling preserves all signs, so the variation counts are
    those of the exact rational chain.
    """
    chain = [g.primitive()]
    d = g.derivative()
    if d:
        chain.append(d.primitive())
    while chain[-1].degree >= 1:
        rem = chain[-2].to_rat() % chain[-1].to_rat()
        if not rem:
            break
        chain.append((-rem).primitive())
    return chain


def _variations(values) -> int:
    count = 0
    prev = 0
    for v in values:
        s = (v > 0) - (v < 0)
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def _count_roots_open(g: RatPoly, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots of squarefree g in the open interval (lo, hi)."""
    while g.degree >= 1 and g(lo) == 0:
        g, rem = divmod(g, RatPoly([-lo, 1]))
        assert not rem
    while g.degree >= 1 and g(hi) == 0:
        g, rem = divmod(g, RatPoly([-hi, 1]))
        assert not rem
    if g.degree < 1:
        return 0
    chain = _sturm_chain(g)
    v_lo = _variations([p(lo) for p in chain])
    v_hi = _variations([p(hi) for p in chain])
    return v_lo - v_hi


def _find_negative_point(
    h: RatPoly, g: RatPoly, lo: Fraction, hi: Fraction
) -> Fraction:
    """Some rational point in (lo, hi) with h < 0, given g has a root there.

    Bisect while keeping an odd-multiplicity root of h inside; h changes
    sign across it, so midpoints eventually land on the negative side.
    """
    u, v = lo, hi
    for _ in range(4 * max(len(h.coeffs), 8) * 64):
        mid = (u + v) / 2
        if h(mid) < 0:
            return mid
        if g(mid) == 0:
            step = (v - u) / 4
            while True:
                for cand in (mid - step, mid + step):
                    if u < cand < v and h(cand) < 0:
                        return cand
                step /= 2
        if _count_roots_open(g, u, mid) > 0:
            v = mid
        else:
            u = mid
    raise AssertionError("sign-change bisection failed to converge")


def decide_sup_bound(f: Poly, interval: Interval, bound) -> NormCertificate:
    """Exact decision of sup |f| <= bound on the interval; never inconclusive."""
    bound = Fraction(bound)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    fr = as_ratpoly(f)

    def cert(verdict, point=None):
        return NormCertificate(verdict, bound, "sturm", point)

    if not fr:
        return cert(Verdict.CERTIFIED_AT_MOST)
    h = RatPoly([bound * bound]) - fr * fr
    if not h:
        return cert(Verdict.CERTIFIED_AT_MOST)  # |f| == bound everywhere
    for endpoint in (interval.lo, interval.hi):
        if h(endpoint) < 0:
            return cert(Verdict.REFUTED, endpoint)
    if h.degree == 0:
        return cert(Verdict.CERTIFIED_AT_MOST)
    g = _odd_multiplicity_part(h)
    if g.degree >= 1 and _count_roots_open(g, interval.lo, interval.hi) > 0:
        point = _find_negative_point(h, g, interval.lo, interval.hi)
        assert abs(fr(point)) > bound
        return cert(Verdict.REFUTED, point)
    # No sign change inside: one sample with h != 0 decides the interior.
    samples = max(len(h.coeffs) + 1, 2)
    for j in range(1, samples + 1):
        x = interval.lo + interval.width * Fraction(j, samples + 1)
        value = h(x)
        if value == 0:
            continue
        if value < 0:
            return cert(Verdict.REFUTED, x)
        return cert(Verdict.CERTIFIED_AT_MOST)
    raise AssertionError("nonzero polynomial vanished at every sample")


def bernstein_prefilter(
    f: Poly, interval: Interval, bound, max_depth: int = DEFAULT_PREFILTER_DEPTH
) -> NormCertificate:
    """Sufficient subdivision check: certify when all Bernstein coefficients
    of bound - f and bound + f are nonnegative on every leaf, refute when an
    evaluated endpoint or midpoint violates, else inconclusive at depth.
    """
    bound = Fraction(bound)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    fr = as_ratpoly(f)
    upper = RatPoly([bound]) - fr
    lower = RatPoly([bound]) + fr
    deepest = 0

    def visit(cu, cl, lo, hi, depth):
        nonlocal deepest
        deepest = max(deepest, depth)
        for coeffs in (cu, cl):
            if coeffs[0] < 0:
                return Verdict.REFUTED, lo
            if coeffs[-1] < 0:
                return Verdict.REFUTED, hi
        if all(c >= 0 for c in cu) and all(c >= 0 for c in cl):
            return Verdict.CERTIFIED_AT_MOST, None
        if depth >= max_depth:
            return Verdict.INCONCLUSIVE, None
        mid = (lo + hi) / 2
        cu_l, cu_r = bernstein_split(cu)
        cl_l, cl_r = bernstein_split(cl)
        left, point = visit(cu_l, cl_l, lo, mid, depth + 1)
        if left is Verdict.REFUTED:
            return left, point
        right, point = visit(cu_r, cl_r, mid, hi, depth + 1)
        if right is Verdict.REFUTED:
            return right, point
        if Verdict.INCONCLUSIVE in (left, right):
            return Verdict.INCONCLUSIVE, None
        return Verdict.CERTIFIED_AT_MOST, None

    verdict, point = visit(
        to_bernstein(upper, interval),
        to_bernstein(lower, interval),
        interval.lo,
        interval.hi,
        0,
    )
    if point is not None:
        assert abs(fr(point)) > bound
    return NormCertificate(verdict, bound, "bernstein", point, deepest)


def certify_sup_bound(
    f: Poly, interval: Interval, bound, prefilter_depth: int = DEFAULT_PREFILTER_DEPTH
) -> NormCertificate:
    """Cheap Bernstein prefilter first, exact Sturm decision as fallback."""
    cert = bernstein_prefilter(f, interval, bound, prefilter_depth)
    if cert.verdict is Verdict.INCONCLUSIVE:
        return decide_sup_bound(f, interval, bound)
    return cert


def sup_norm_enclosure(
    f: Poly, interval: Interval, tol
) -> tuple[Fraction, Fraction]:
    """Rational bracket [lo, hi] around sup |f| with hi - lo <= tol."""
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    fr = as_ratpoly(f)
    if fr.degree <= 0:
        value = abs(fr.coeffs[0]) if fr else Fraction(0)
        return value, value
    lo_b = max(abs(fr(interval.lo)), abs(fr(interval.hi)))
    hi_b = max(Fraction(1), sum(abs(c) for c in to_bernstein(fr, interval)))
    while hi_b - lo_b > tol:
        mid = (lo_b + hi_b) / 2
        cert = decide_sup_bound(fr, interval, mid)
        if cert.verdict is Verdict.CERTIFIED_AT_MOST:
            hi_b = mid
        else:
            lo_b = abs(fr(cert.refutation_point))
    return lo_b, hi_b


def rational_point_lower_bound(f: IntPoly, p) -> Fraction:
    """|f(a/b)| for monic integer f, certified >= 1/b**deg f.

    b**n * f(a/b) is a nonzero integer: a monic integer polynomial has no
    non-integer rational root.
    """
    if not isinstance(f, IntPoly) or not f.is_monic:
        raise ValueError("polynomial must be a monic IntPoly")
    p = Fraction(p)
    if p.denominator < 2:
        raise ValueError(f"{p} is an integer point")
    n = f.degree
    scaled = sum(
        c * p.numerator**i * p.denominator ** (n - i)
        for i, c in enumerate(f.coeffs)
    )
    assert scaled != 0, "monic integer polynomial cannot vanish at a non-integer rational"
    value = Fraction(abs(scaled), p.denominator**n)
    assert value >= Fraction(1, p.denominator**n)
    return value


@dataclass(frozen=True)
class WitnessRecord:
    """A pair, a monic polynomial, and the certified verdict tying them.

    A certified record proves the interval's constant is at most
    bound**(1/degree); when both endpoint denominators are >= 2 the
    endpoint lower bounds force sup |f| to equal the bound exactly.
    """

    pair: FareyPair
    poly: IntPoly
    degree: int
    bound: Fraction
    certificate: NormCertificate
    tm_upper: ConstantValue

    def is_proof_for(self, pair: FareyPair) -> bool:
        return (
            self.pair == pair
            and self.certificate.verdict is Verdict.CERTIFIED_AT_MOST
            and self.bound
            == max(Fraction(1, pair.b1), Fraction(1, pair.b2)) ** self.degree
        )

    def render(self) -> list[str]:
        lines = [
            f"interval={format_rational(self.pair.lo)}..{format_rational(self.pair.hi)}",
            f"degree={self.degree}",
        ]
        lines.extend(self.certificate.render())
        lines.append(f"tm_upper={self.tm_upper}")
        return lines


def verify_witness(
    pair: FareyPair, f: IntPoly, prefilter_depth: int = DEFAULT_PREFILTER_DEPTH
) -> WitnessRecord:
    """Check that f witnesses the conjectured constant on the pair's interval.

    The target bound is max(1/b1, 1/b2)**deg f.  On success the record's
    tm_upper equals bound**(1/deg f); endpoint evaluations already force
    sup |f| >= the bound when both denominators are >= 2, so certification
    then implies exact equality, which is asserted.
    """
    if not isinstance(f, IntPoly) or not f.is_monic:
        raise ValueError("witness must be a monic IntPoly")
    n = f.degree
    if n < 1:
        raise ValueError("witness must have degree >= 1")
    bound = max(Fraction(1, pair.b1), Fraction(1, pair.b2)) ** n
    cert = certify_sup_bound(f, pair.interval(), bound, prefilter_depth)
    record = WitnessRecord(pair, f, n, bound, cert, ConstantValue(bound, n))
    if cert.verdict is Verdict.CERTIFIED_AT_MOST and min(pair.b1, pair.b2) >= 2:
        anchor = pair.hi if pair.b1 <= pair.b2 else pair.lo
        assert rational_point_lower_bound(f, anchor) == bound
    return record
