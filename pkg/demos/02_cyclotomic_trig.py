"""Exact trigonometry in cyclotomic fields.

cos(2 pi a/p), csc(pi a/p) and cot(pi a/p) are algebraic numbers. Here they are
elements of Q(zeta_m) in the power basis modulo the cyclotomic polynomial, so
products and sums of them are exact and rational results come out as Fractions.
"""

import math

from ntheta.exactnum import CyclotomicNumber, cyc_to_float, cyclotomic_polynomial, to_rational, trig_value

print("Phi_12 coefficients:", cyclotomic_polynomial(12).coefficients)

z = CyclotomicNumber.zeta(8)
sqrt2 = z + z.inverse()
print("(zeta_8 + zeta_8^-1)^2 =", to_rational(sqrt2 * sqrt2))

p = 7
csc = [trig_value("csc_pi_over", a, p) for a in range(1, p)]
# sum_{a=1}^{p-1} csc^2(pi a/p) = (p^2 - 1)/3
acc = CyclotomicNumber.rational(csc[0].order, 0)
for c in csc:
    acc = acc + c * c
print(f"sum csc^2(pi a/{p}) = {to_rational(acc)}   expected {(p * p - 1) / 3}")

c = trig_value("cos_two_pi", 1, 5)
print("cos(2 pi/5) exactly lives in order", c.order, "; float image", cyc_to_float(c).real, "vs", math.cos(2 * math.pi / 5))
print("1000-bit image of cot(pi/7):", str(cyc_to_float(trig_value("cot_pi_over", 1, 7), precision=1000).real)[:60], "...")
