"""Walkthrough: from stack series to moduli-space polynomials.

In the good case (every semistable bundle stable) the moduli space is a
projective variety and its series is a genuine polynomial.  This demo
certifies polynomiality at the dimension bound, factors out the fixed
determinant, and evaluates the chi_t, Euler and signature specializations.
"""

from math import gcd

from hodge_series import (
    good_case,
    hp_moduli_fixed_det,
    hp_moduli_space,
    parse_group,
    specialize,
    to_polynomial,
)
from hodge_series.formulas import chi_t_fixed_det_formula

g = 2

print("=== which degrees are good for GL_2 and GL_3? ===")
for r in (2, 3):
    spec = parse_group("GL%d" % r)
    flags = {d: good_case(spec, (d,)) for d in range(r)}
    print("GL_%d:" % r, flags, " (coprimality:",
          {d: gcd(r, d) == 1 for d in range(r)}, ")")

print()
print("=== moduli space of rank-2, degree-1 bundles, genus 2 ===")
spec = parse_group("GL2")
m = hp_moduli_space(spec, (1,), g)
dim = (g - 1) * 4 + 1   # (g-1) dim G + dim Z_G
p = to_polynomial(m, 2 * dim)
print("polynomial of degree", p.total_degree(), "=", p)
print("Poincare polynomial:", specialize(p, "poincare"))

print()
print("=== fixed determinant ===")
q = to_polynomial(hp_moduli_fixed_det(2, 1, g), 2 * (g - 1) * 3)
print("series:", q)
print("chi_t:", specialize(q, "chi_t"), "==",
      chi_t_fixed_det_formula(2, g))
print("euler:", specialize(q, "euler"), "  signature:", specialize(q, "signature"))

print()
print("=== rank 3 ===")
q3 = to_polynomial(hp_moduli_fixed_det(3, 1, g), 2 * (g - 1) * 8)
print("chi_t:", specialize(q3, "chi_t"))
print("matches product formula:",
      specialize(q3, "chi_t") == chi_t_fixed_det_formula(3, g))
