"""Canonical number systems: every Gaussian integer has a unique finite
expansion in base theta = -n + i with digits {0, ..., n^2}.

Run:  python demos/06_cns_expansions.py
"""

import quadcantor as qc

F = qc.make_field(-1)
basis = qc.cns_basis(2)  # theta = -2+i, digits 0..4
print("base theta =", basis.theta, " digit count =", basis.digit_count)

for value in [F.element(5), F.element(-7, 3), basis.theta, F.element(1)]:
    digits = qc.expand(value, basis)
    back = qc.evaluate(digits, basis)
    print(f"  {qc.element_text(value):>7}  ->  {digits}  ->  {qc.element_text(back)}")

# the same machinery describes the alpha-adic points: sums of digit multiples
# of powers alpha^k for -ell <= k <= ell
points = qc.dyadic_alpha_description(2, 1)
print("\nlevel-1 alpha-adic description: ", len(points), "points")
alpha = basis.theta
fact = qc.factor_element(alpha)
sums = {sum(qc.minimal_tuple(z, fact)) for z in points}
print("minimal-tuple sums seen:", sorted(sums), "(all <= 1, as they must be)")
