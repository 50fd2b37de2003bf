"""Dedekind sums three ways, and the reciprocity law that ties them together.

s(q, p) is a finite rational sum. We compute it from the sawtooth definition,
from the cotangent form inside a cyclotomic field (no floats anywhere), and
with plain floating point, then watch reciprocity hold exactly.
"""

from fractions import Fraction

from ntheta.dedekind import dedekind_sum, dedekind_sum_cotangent, dedekind_sum_float, reciprocity_defect

print("s(q, p) for a few small pairs")
for p, q in [(3, 1), (5, 2), (7, 3), (11, 4), (30, 7)]:
    exact = dedekind_sum(q, p)
    cot = dedekind_sum_cotangent(q, p)
    print(f"  s({q},{p}) = {str(exact):>10}   cotangent form agrees: {cot == exact}   float: {dedekind_sum_float(q, p):+.12f}")

# s(1, p) has a closed form; check it for a handful of p
print("\ns(1, p) == (p-1)(p-2)/(12p):", all(dedekind_sum(1, p) == Fraction((p - 1) * (p - 2), 12 * p) for p in range(1, 40)))

# reciprocity: s(p,q) + s(q,p) = -1/4 + (p/q + q/p + 1/(pq)) / 12
pairs = [(p, q) for p in range(1, 60) for q in range(1, 60) if __import__("math").gcd(p, q) == 1]
print(f"reciprocity defect is zero on {len(pairs)} coprime pairs:", all(reciprocity_defect(p, q) == 0 for p, q in pairs))
