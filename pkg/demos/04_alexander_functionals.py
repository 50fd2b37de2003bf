"""Functionals of symmetric Alexander polynomials.

Polynomials are Laurent polynomials symmetric under T -> 1/T, possibly with
half-integer exponents after inducing to a knot complement with divisibility d.
"""

import random
from fractions import Fraction

from ntheta.alexander import (
    TREFOIL,
    format_poly,
    gamma_of,
    induce_knot_complement_poly,
    parse_poly,
    surgery_weight,
    theta_zero_surgery,
    validate,
)
from ntheta.selftest import random_alexander

print("trefoil:", format_poly(TREFOIL), " W =", surgery_weight(TREFOIL), " Gamma =", gamma_of(TREFOIL))
print("theta_i for the trefoil:", [str(theta_zero_surgery(TREFOIL, i)) for i in range(-2, 3)])

A = parse_poly("4:2,2:-3,0:3,-2:-3,-4:2")
print("\nA =", format_poly(A), ", validate ->", validate(A))
for d in (2, 3):
    A_X = induce_knot_complement_poly(A, d, d)
    print(f"  d={d}: A_X = {format_poly(A_X)}")
    print(f"        Gamma(A_X) = {gamma_of(A_X)} = (d/k)Gamma(A) + (d^2-1)/12 = {gamma_of(A) + Fraction(d * d - 1, 12)}")

print("\nvalidation catches an asymmetric input:", validate(parse_poly("2:1,0:1")))
try:
    surgery_weight(parse_poly("1:1,-1:1"))
except ValueError as exc:
    print("W needs integer exponents:", exc)

rng = random.Random(0)
ok = 0
for _ in range(100):
    B = random_alexander(rng)
    top = int(B.top_degree)
    ok += theta_zero_surgery(B, 0) + 2 * sum(theta_zero_surgery(B, i) for i in range(1, top + 1)) == surgery_weight(B)
print(f"theta_0 + 2 sum_i theta_i == W on {ok}/100 random polynomials")
