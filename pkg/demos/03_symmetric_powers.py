"""
Symmetric powers and their constituents
=======================================

Sym^k of the 9-dimensional character comes from the Adams operations through
Newton's identities; inner products then split it into irreducibles.
"""

from math import comb

from excsing.chartab import load_table
from excsing.bundled import TABLE_DATA
from excsing.reps import delta_profile, semi_invariant_counts, verify_center_dims

t = load_table(TABLE_DATA)

for k in range(1, 10):
    p = delta_profile(t, k)
    print(f"Delta_{k} = {p}   (total {p.total} = C({8 + k},{k}) = {comb(8 + k, k)})")

counts = semi_invariant_counts(t, 12)
print("one-dimensional constituents by degree:", counts)
print("first degree with a semi-invariant:", min(d for d, c in counts.items() if c))

print("centre acts trivially or in degree divisible by 9:", bool(verify_center_dims(t)))
