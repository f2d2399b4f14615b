"""
Loading and validating character tables
=======================================

A table is JSON: class sizes and orders, prime power maps, and irreducible
values as cyclotomic numbers.  Parsing runs every consistency check.
"""

import json

from excsing.chartab import TableValidationError, load_table, parse_table
from excsing.bundled import TABLE_DATA


def rat(a):
    return {"n": 1, "terms": [[0, a, 1]] if a else []}


# S3: identity, transpositions, 3-cycles
s3 = {
    "order": 6,
    "exponent": 6,
    "classes": [{"size": 1, "elementOrder": 1}, {"size": 3, "elementOrder": 2}, {"size": 2, "elementOrder": 3}],
    "powerMaps": {str(p): [0, 0 if p == 2 else 1, 0 if p == 3 else 2] for p in (2, 3, 5, 7, 11, 13)},
    "irreducibles": [
        {"name": "triv", "values": [rat(1), rat(1), rat(1)]},
        {"name": "sign", "values": [rat(1), rat(-1), rat(1)]},
        {"name": "std", "values": [rat(2), rat(0), rat(-1)]},
    ],
    "designated": "std",
}
t = parse_table(json.dumps(s3))
print("S3 degrees:", t.degrees, " cube map:", t.power_map(3))

# break orthogonality and watch validation name the failed invariant
s3["irreducibles"][2]["values"][2] = rat(1)
try:
    parse_table(json.dumps(s3))
except TableValidationError as e:
    print("rejected:", e)

# the bundled table of the order 12597120 group
big = load_table(TABLE_DATA)
print("order", big.order, "classes", big.n_classes, "exponent", big.exponent)
print("designated 9-dimensional character:", big.designated)
print("degrees up to 100:", sorted({d for d in big.degrees if d <= 100}))
