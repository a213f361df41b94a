"""Monic integer polynomials that are tiny at prescribed numeric points.

For conjugation-closed points that are transcendental (or algebraic of
high degree), a monic integer polynomial can be made smaller than any
epsilon at all of them simultaneously.  The construction finds a short
lattice vector whose linear forms are small at the points, then corrects
x**n by integer multiples of its powers; the result is verified with
outward-rounded rational interval arithmetic, never trusted to floats.
"""
import math
from fractions import Fraction as F

from monicheb import format_poly, small_value_polynomial


def float_value(poly, z):
    acc = 0j
    for c in reversed(poly.coeffs):
        acc = acc * z + c
    return abs(acc)


print("One real target, epsilon = 1/2:")
f = small_value_polynomial([math.pi], F(1, 2), precision=48)
print(f"  {format_poly(f)}")
print(f"  |F(pi)| ~ {float_value(f, math.pi):.6f} < 0.5")
print()

print("A complex-conjugate pair, epsilon = 1/4 (coefficients stay real):")
alpha = complex(0.3, 0.8)
g = small_value_polynomial([alpha, alpha.conjugate()], F(1, 4), precision=48)
print(f"  degree {g.degree}, {format_poly(g)}")
print(f"  |F(alpha)| ~ {float_value(g, alpha):.6f} < 0.25")
print()

print("Two real targets at once, epsilon = 1/4:")
h = small_value_polynomial([math.e, math.pi], F(1, 4), precision=48)
print(f"  degree {h.degree}")
for z in (math.e, math.pi):
    print(f"  |F({z:.5f})| ~ {float_value(h, z):.6f} < 0.25")
print()

print("Rational inputs sit outside the theory (a monic integer polynomial")
print("can never beat 1/b**n at a/b) but still get best-effort output:")
k = small_value_polynomial([0.5], F(1, 2), precision=48)
print(f"  {format_poly(k)}, F(1/2) = {k(F(1, 2))}")
