"""Hand-built character tables for small groups, plus shared oracles.

Each table is written down from the group's elements: class sizes, orders,
where p-th powers land, and the irreducible values.  Power maps are given for
every prime up to 13 because validation wants them.
"""

from __future__ import annotations

import itertools
import json
from math import comb, gcd

import numpy as np

from excsing.chartab import parse_table

PRIMES = (2, 3, 5, 7, 11, 13)


def cyc(n: int, coeffs: dict[int, int]) -> dict:
    return {"n": n, "terms": [[k, c, 1] for k, c in sorted(coeffs.items()) if c]}


def rat(a: int) -> dict:
    return {"n": 1, "terms": [[0, a, 1]] if a else []}


def _table(order, exponent, classes, power, chars, designated):
    return {
        "order": order,
        "exponent": exponent,
        "classes": [{"size": s, "elementOrder": o} for s, o in classes],
        "powerMaps": {str(p): [power(c, p) for c in range(len(classes))] for p in PRIMES},
        "irreducibles": [{"name": n, "values": v} for n, v in chars],
        "designated": designated,
    }


def cyclic_json(n: int, designated: str = "X1") -> dict:
    """C_n with classes g^j and characters X_a(g^j) = zeta_n^(aj)."""
    classes = [(1, n // gcd(j, n)) for j in range(n)]
    chars = [(f"X{a}", [cyc(n, {a * j % n: 1}) for j in range(n)]) for a in range(n)]
    return _table(n, n, classes, lambda c, p: c * p % n, chars, designated)


def s3_json() -> dict:
    # classes: e, transpositions, 3-cycles
    classes = [(1, 1), (3, 2), (2, 3)]

    def power(c, p):
        if c == 1:
            return 0 if p % 2 == 0 else 1
        if c == 2:
            return 0 if p % 3 == 0 else 2
        return 0

    chars = [
        ("triv", [rat(1), rat(1), rat(1)]),
        ("sign", [rat(1), rat(-1), rat(1)]),
        ("std", [rat(2), rat(0), rat(-1)]),
    ]
    return _table(6, 6, classes, power, chars, "std")


def d4_json() -> dict:
    # classes: e, r^2, {r, r^3}, {s, sr^2}, {sr, sr^3}
    classes = [(1, 1), (1, 2), (2, 4), (2, 2), (2, 2)]

    def power(c, p):
        if p == 2:
            return {0: 0, 1: 0, 2: 1, 3: 0, 4: 0}[c]
        return c

    one = rat(1)
    chars = [
        ("triv", [one] * 5),
        ("a", [one, one, one, rat(-1), rat(-1)]),
        ("b", [one, one, rat(-1), one, rat(-1)]),
        ("c", [one, one, rat(-1), rat(-1), one]),
        ("rho", [rat(2), rat(-2), rat(0), rat(0), rat(0)]),
    ]
    return _table(8, 4, classes, power, chars, "rho")


def a4_json() -> dict:
    # classes: e, double transpositions, (123)-type, (132)-type
    classes = [(1, 1), (3, 2), (4, 3), (4, 3)]

    def power(c, p):
        if c == 0:
            return 0
        if c == 1:
            return 0 if p == 2 else 1
        if p == 3:
            return 0
        if p % 3 == 2:
            return 5 - c  # swaps the two 3-classes
        return c

    w, w2 = cyc(3, {1: 1}), cyc(3, {2: 1})
    one = rat(1)
    chars = [
        ("triv", [one] * 4),
        ("omega", [one, one, w, w2]),
        ("omegabar", [one, one, w2, w]),
        ("V", [rat(3), rat(-1), rat(0), rat(0)]),
    ]
    return _table(12, 6, classes, power, chars, "V")


def trivial_json() -> dict:
    return _table(1, 1, [(1, 1)], lambda c, p: 0, [("1", [rat(1)])], "1")


FIXTURES = {
    "S3": s3_json,
    "C6": lambda: cyclic_json(6),
    "C3": lambda: cyclic_json(3),
    "D4": d4_json,
    "A4": a4_json,
    "trivial": trivial_json,
}


def load_fixture(name: str):
    return parse_table(json.dumps(FIXTURES[name]()))


# ---- explicit matrix groups, for a Molien-series oracle ----


def _closure(gens: list[np.ndarray]) -> list[np.ndarray]:
    elems = [np.eye(gens[0].shape[0], dtype=complex)]
    frontier = list(elems)
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = g @ a
                if not any(np.allclose(b, e) for e in elems):
                    elems.append(b)
                    new.append(b)
        frontier = new
    return elems


def matrix_group(name: str) -> list[np.ndarray]:
    if name == "S3":
        c, s = np.cos(2 * np.pi / 3), np.sin(2 * np.pi / 3)
        return _closure([np.array([[c, -s], [s, c]]), np.array([[1.0, 0], [0, -1.0]])])
    if name == "D4":
        return _closure([np.array([[0.0, -1], [1, 0]]), np.array([[1.0, 0], [0, -1.0]])])
    if name == "A4":
        cyc3 = np.array([[0.0, 0, 1], [1, 0, 0], [0, 1, 0]])
        return _closure([cyc3, np.diag([1.0, -1, -1])])
    if name == "C6":
        return _closure([np.array([[np.exp(2j * np.pi / 6)]])])
    raise KeyError(name)


def molien_invariants(name: str, kmax: int) -> list[int]:
    """dim of degree-k invariants, k = 0..kmax, averaging h_k(eigenvalues)."""
    total = np.zeros(kmax + 1, dtype=complex)
    group = matrix_group(name)
    for g in group:
        eig = np.linalg.eigvals(g)
        # series of prod 1/(1 - e t)
        series = np.zeros(kmax + 1, dtype=complex)
        series[0] = 1
        for e in eig:
            for k in range(1, kmax + 1):
                series[k] += e * series[k - 1]
        total += series
    total /= len(group)
    out = [int(round(x.real)) for x in total]
    assert all(abs(x - y) < 1e-6 for x, y in zip(total, out))
    return out


def brute_sigma(dims_mults: list[tuple[int, int]]) -> set[int]:
    sums = {0}
    for d, m in dims_mults:
        sums = {s + d * k for s in sums for k in range(m + 1)}
    return sums


def brute_sigma_enumerate(dims: list[int]) -> set[int]:
    """Every subset of the parts, one at a time."""
    out = set()
    for mask in itertools.product((0, 1), repeat=len(dims)):
        out.add(sum(d for d, b in zip(dims, mask) if b))
    return out


def ambient(m: int) -> int:
    return comb(8 + m, m)
