"""
Exact arithmetic in cyclotomic fields
=====================================

Character values live in Q(zeta_n).  Elements are kept reduced modulo the
n-th cyclotomic polynomial, so equality is exact.
"""

from fractions import Fraction

from excsing.cyclo import Cyclotomic, cyclotomic_poly, zeta

# Phi_12 = x^4 - x^2 + 1
print("Phi_12 coefficients:", cyclotomic_poly(12))

w = zeta(3)
print("w =", w)
print("1 + w + w^2 =", 1 + w + w * w)

# values from different fields combine after lifting to the lcm
x = zeta(4) + zeta(3)
print("i + w lives in Q(zeta_%d): %s" % (x.n, x))
print("|i + w|^2 =", x * x.conj())

# the normalized trace does not depend on which field we view x in
print("trace of zeta_5:", zeta(5).normalized_trace())
print("same after lifting to Q(zeta_15):", zeta(5).lift(15).normalized_trace())

half = Cyclotomic.rational(Fraction(1, 2))
print("zeta_9 / 2 integral?", (zeta(9) * half).is_integral())
