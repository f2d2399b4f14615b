"""
Sieving Hilbert functions
=========================

For each dimension n the search enumerates integer-valued polynomials whose
values lie in the Sigma sets and which satisfy the linear constraints.
"""

from excsing.hilbert import binomial_d, builtin_constraints, check_candidate, search
from excsing.bundled import load_profile_data, sum_sets

sums = sum_sets(load_profile_data().delta)

for n in range(1, 7):
    found = search(n, sums)
    print(f"n={n}: {len(found)} candidate(s)")
    for c in found:
        print("   d =", c.d, " q =", c.q)

(c4,) = search(4, sums)
print("\nd recovered by finite differences:", [binomial_d(c4.h, 4, delta) for delta in range(2)])
for r in check_candidate(c4, builtin_constraints(4), sums).results[:4]:
    print("  ", r.name, r.passed, r.detail)

# without the extra q-conditions, thirteen degree-6 candidates survive
strict = search(6, sums, builtin_constraints(6, strict=True))
print("\nn=6 with bare hypotheses:", len(strict), "candidates, e.g. d =", strict[0].d, "q =", strict[0].q[:5])
