"""Tour of Farey sequences, consecutive pairs, and conjectured constants.

Every interval between consecutive Farey fractions a2/b2 < a1/b1 carries
a conjectured monic integer Chebyshev constant max(1/b1, 1/b2); this
script enumerates the order-8 sequence and prints those values.
"""
from fractions import Fraction as F

from monicheb import (
    conjecture_value,
    farey_intervals,
    farey_sequence,
    is_consecutive_pair,
    mediant,
)

print("Farey sequence of order 5:")
print("  " + "  ".join(str(q) for q in farey_sequence(5)))
print()

print("Adjacent pairs have determinant a1*b2 - a2*b1 = 1:")
for pair in farey_intervals(5)[:6]:
    det = pair.a1 * pair.b2 - pair.a2 * pair.b1
    print(f"  {pair}  det={det}  mediant={mediant(pair)}")
print()

print("The determinant characterizes consecutiveness:")
print("  (1/3, 2/5) consecutive:", is_consecutive_pair(F(1, 3), F(2, 5)))
print("  (1/4, 1/2) consecutive:", is_consecutive_pair(F(1, 4), F(1, 2)))
print()

print("Conjectured constants on order-8 intervals (all CONJECTURED until")
print("a certified witness upgrades them):")
for pair in farey_intervals(8):
    if pair.b1 >= 2 and pair.b2 >= 2:
        value, label = conjecture_value(pair)
        print(f"  t_M{pair} = {value}   [{label}]")
