"""
Which subspace dimensions can occur
===================================

An invariant subspace of Sym^k is a sum of constituents, so its dimension
lies in Sigma_k, the set of partial sums of Delta_k.
"""

from excsing.bundled import load_profile_data
from excsing.sums import realizations, sigma

delta = load_profile_data().delta

for k in (1, 2, 3, 4):
    print(f"Sigma_{k} =", list(sigma(delta[k])))
print("|Sigma_5| =", len(sigma(delta[5])), " |Sigma_9| =", len(sigma(delta[9])))

# 39 is reachable in degree 6 in exactly one way
for r in realizations(delta[6], 39):
    print("39 =", " + ".join(map(str, r.dims)))
print("38 in Sigma_6?", 38 in sigma(delta[6]))
