"""
Refuting the survivors
======================

Each survivor forces a constituent W among the forms vanishing on V.
Multiplying by linear forms maps U (x) W into the next degree; the pieces
that can land there never leave room for the rest.
"""

from excsing.exclusion import case_from_candidate, exclude_case
from excsing.hilbert import search
from excsing.bundled import load_profile_data, sum_sets

data = load_profile_data()
sums = sum_sets(data.delta)

for n in (4, 5):
    (cand,) = search(n, sums)
    ref = exclude_case(case_from_candidate(cand, data.delta, data.tensors))
    print(f"n={n}, q={cand.q[:7]}: {ref.verdict}")
    for step in ref.trace:
        if step["rule"] == "realize":
            print(f"   q_{step['degree']}={step['q']} forces {step['forced']}")
        for sub in step.get("steps", ()):
            if sub["rule"] == "accounting":
                print(f"   image {sub['image']} leaves {sub['residual']}, realizable: {not sub['closed']}")
            else:
                print(f"   {sub['rule']}: U x W = {sub['tensor_parts']}, images {sub['image_options']}")
