"""Monic integer polynomials with prescribed rational values.

Two layers: closed-form two- and three-point formulas on consecutive
Farey pairs, and the general inductive construction that hits
F(a_i/b_i) = 1/b_i**n exactly for arbitrary finite sets of reduced
non-integer rationals.  The admissible degree n is governed by
multiplicative orders and can be astronomically large for some inputs,
so the general construction takes an explicit degree cap and refuses
loudly instead of running forever.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .farey import FareyPair, mediant
from .numpoly import IntPoly, extended_gcd


class CongruenceError(ValueError):
    """A prescribed value violates its congruence precondition."""

    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index


class DegreeSearchError(ValueError):
    """No admissible degree within the requested cap."""

    def __init__(self, minimal: int, cap: int):
        super().__init__(
            f"minimal admissible degree is {minimal}, above the cap {cap}"
        )
        self.minimal = minimal
        self.cap = cap


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; inputs here are desk-scale."""
    n = abs(n)
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def multiplicative_order(a: int, modulus: int) -> int:
    """Order of a in (Z/modulus)*; modulus 1 gives 1."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if modulus == 1:
        return 1
    a %= modulus
    if gcd(a, modulus) != 1:
        raise ValueError(f"{a} is not invertible mod {modulus}")
    # Euler phi from the factorization, then strip unnecessary prime powers.
    phi = 1
    for p, e in _factorize(modulus).items():
        phi *= (p - 1) * p ** (e - 1)
    order = phi
    for p in _factorize(phi):
        while order % p == 0 and pow(a, order // p, modulus) == 1:
            order //= p
    return order


def _binomial_power(l: int, f: int, e: int) -> IntPoly:
    """(l*x - f)**e expanded directly from binomial coefficients."""
    # coeff_i = C(e, i) * l**i * (-f)**(e-i); computed incrementally so the
    # high-degree cases stay cheap.
    coeffs = [0] * (e + 1)
    binom = 1
    f_pow = [1] * (e + 1)
    for i in range(1, e + 1):
        f_pow[i] = f_pow[i - 1] * (-f)
    l_pow = 1
    for i in range(e + 1):
        coeffs[i] = binom * l_pow * f_pow[e - i]
        binom = binom * (e - i) // (i + 1)
        l_pow *= l
    return IntPoly(coeffs)


def pair_polynomial(pair: FareyPair, n: int, a_hi: int = 1, a_lo: int = 1) -> IntPoly:
    """Monic degree-n polynomial hitting prescribed values at both endpoints.

    The value at the upper endpoint a1/b1 is a_hi/b1**n and at the lower
    endpoint a2/b2 is a_lo/b2**n.  Requires a_hi = a1**n (mod b1) and
    a_lo = a2**n (mod b2); explicit closed form:

        x**n + ((a_hi - a1**n)/b1) (b2 x - a2)**(n-1)
             + ((a_lo - a2**n)/b2) (a1 - b1 x)**(n-1)
    """
    if n < 2:
        raise ValueError("degree must be >= 2")
    a1, b1, a2, b2 = pair.a1, pair.b1, pair.a2, pair.b2
    if (a_hi - a1**n) % b1 != 0:
        raise CongruenceError(1, f"{a_hi} is not congruent to {a1}^{n} mod {b1}")
    if (a_lo - a2**n) % b2 != 0:
        raise CongruenceError(2, f"{a_lo} is not congruent to {a2}^{n} mod {b2}")
    c1 = (a_hi - a1**n) // b1
    c2 = (a_lo - a2**n) // b2
    result = (
        IntPoly.monomial(n)
        + c1 * _binomial_power(b2, a2, n - 1)
        + c2 * _binomial_power(-b1, -a1, n - 1)
    )
    assert result.is_monic and result.degree == n
    return result


def triple_polynomial(
    pair: FareyPair, n: int, a_hi: int, a_lo: int, a_med: int, j: int
) -> IntPoly:
    """Extend pair_polynomial to also hit a_med/b3**n at the mediant a3/b3.

    The correction term (b2 x - a2)**j (a1 - b1 x)**(n-1-j) vanishes at
    both endpoints, so their values are untouched; any 1 <= j <= n-2 works.
    """
    if n < 3:
        raise ValueError("degree must be >= 3")
    if not 1 <= j <= n - 2:
        raise ValueError(f"exponent split j={j} outside [1, {n - 2}]")
    med = mediant(pair)
    a3, b3 = med.numerator, med.denominator
    if (a_med - a3**n) % b3 != 0:
        raise CongruenceError(3, f"{a_med} is not congruent to {a3}^{n} mod {b3}")
    base = pair_polynomial(pair, n, a_hi, a_lo)
    c1 = (a_hi - pair.a1**n) // pair.b1
    c2 = (a_lo - pair.a2**n) // pair.b2
    c3 = (a_med - a3**n) // b3
    correction = _binomial_power(pair.b2, pair.a2, j) * _binomial_power(
        -pair.b1, -pair.a1, n - 1 - j
    )
    result = base + (c3 - c2 - c1) * correction
    assert result.is_monic and result.degree == n
    return result


@dataclass(frozen=True)
class ConstructionState:
    """All quantities of the inductive construction for a point list.

    E_list[j] (keyed from 2) are the products of pairwise determinants,
    D their lcm, m the smallest exponent bound with p**a | D implying
    a < m, and l/f the Bezout data a_i*l_i - b_i*f_i = 1.  n is the
    minimal admissible degree.
    """

    points: tuple[Fraction, ...]
    e_values: dict[int, int] = field(repr=False)
    d_value: int
    m: int
    n: int
    bezout: tuple[tuple[int, int], ...] = field(repr=False)

    @property
    def k(self) -> int:
        return len(self.points)

    def _split(self, value: int, j: int) -> tuple[int, int]:
        b_j = self.points[j - 1].denominator
        supported = 1
        for p, e in _factorize(value).items():
            if b_j % p == 0:
                supported *= p**e
        return supported, abs(value) // supported

    def d1(self, j: int) -> int:
        return self._split(self.d_value, j)[0]

    def d2(self, j: int) -> int:
        return self._split(self.d_value, j)[1]

    def e1(self, j: int) -> int:
        return self._split(self.e_values[j], j)[0]

    def e2(self, j: int) -> int:
        return self._split(self.e_values[j], j)[1]


def _validate_points(points) -> list[Fraction]:
    pts = [Fraction(p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")
    for p in pts:
        if p.denominator < 2:
            raise ValueError(f"integer point {p} not allowed")
    return pts


def construction_state(points) -> ConstructionState:
    """Compute determinants, lcm data, and the minimal admissible degree.

    The degree must be a common multiple of the orders of a_j modulo
    b_j**(k*m) and of b_j modulo D2(j)**(k*m), and at least k*m.
    """
    pts = _validate_points(points)
    k = len(pts)
    e_values: dict[int, int] = {}
    for j in range(2, k + 1):
        prod = 1
        aj, bj = pts[j - 1].numerator, pts[j - 1].denominator
        for i in range(1, j):
            ai, bi = pts[i - 1].numerator, pts[i - 1].denominator
            prod *= aj * bi - ai * bj
        e_values[j] = prod
    d_value = 1
    for e in e_values.values():
        d_value = lcm(d_value, abs(e))
    m = 1 + max(_factorize(d_value).values(), default=0)
    km = k * m

    order_lcm = 1
    state_partial = ConstructionState(tuple(pts), e_values, d_value, m, 0, ())
    for j in range(1, k + 1):
        aj, bj = pts[j - 1].numerator, pts[j - 1].denominator
        order_lcm = lcm(order_lcm, multiplicative_order(aj, bj**km))
        d2j = state_partial.d2(j)
        order_lcm = lcm(order_lcm, multiplicative_order(bj, d2j**km))
    n = order_lcm * ((km + order_lcm - 1) // order_lcm)

    bezout = []
    for p in pts:
        g, l, f = extended_gcd(p.numerator, p.denominator)
        assert g == 1
        bezout.append((l, f))
    return ConstructionState(tuple(pts), e_values, d_value, m, n, tuple(bezout))


def admissible_degree(points) -> int:
    """Minimal degree for which the inductive construction is guaranteed."""
    return construction_state(points).n


def _eval_scaled(poly: IntPoly, a: int, b: int, n: int) -> int:
    """b**n * poly(a/b) as an exact integer (poly degree <= n)."""
    total = 0
    a_pow = 1
    b_pow = b**n
    for c in poly.coeffs:
        if c:
            total += c * a_pow * b_pow
        a_pow *= a
        b_pow //= b
    return total


def multipoint_monic(points, max_degree: int) -> tuple[int, IntPoly]:
    """Monic integer F of admissible degree n with F(a_i/b_i) = 1/b_i**n.

    Runs the induction over the points: the base polynomial fixes the
    first point via a Bezout power, and each step adds
    A * (l x - f)**(n-(k-r)m-r) * prod(b_i x - a_i) to fix the next point
    without disturbing the previous ones.  The required exact divisibility
    is asserted at each step, so the underlying argument is re-checked at
    runtime.
    """
    state = construction_state(points)
    if state.n > max_degree:
        raise DegreeSearchError(state.n, max_degree)
    pts = state.points
    k, m, n = state.k, state.m, state.n
    km = k * m

    a1, b1 = pts[0].numerator, pts[0].denominator
    l1, f1 = state.bezout[0]
    lead = 1 - a1**n
    assert lead % b1**km == 0, "base-step divisibility must hold"
    poly = IntPoly.monomial(n) + (lead // b1**km) * _binomial_power(l1, f1, n - km)
    assert poly.is_monic and poly.degree == n

    vanish = IntPoly([1])
    for r in range(1, k):
        ar, br = pts[r - 1].numerator, pts[r - 1].denominator
        vanish = vanish * IntPoly([-ar, br])
        a_next, b_next = pts[r].numerator, pts[r].denominator
        l_next, f_next = state.bezout[r]
        big_b = _eval_scaled(poly, a_next, b_next, n) - 1
        denom = b_next ** ((k - r) * m) * state.e_values[r + 1]
        assert big_b % denom == 0, "induction divisibility must hold"
        a_mult = -(big_b // denom)
        exponent = n - (k - r) * m - r
        assert exponent >= 0
        correction = a_mult * _binomial_power(l_next, f_next, exponent) * vanish
        assert correction.degree < n or not correction
        poly = poly + correction
        assert poly.is_monic and poly.degree == n
        # The correction vanishes at every previously fixed point; re-check
        # each one exactly so the argument is validated step by step.
        for q in pts[: r + 1]:
            assert _eval_scaled(poly, q.numerator, q.denominator, n) == 1

    for p in pts:
        scaled = _eval_scaled(poly, p.numerator, p.denominator, n)
        assert scaled == 1, f"construction failed at {p}"
    return n, poly
