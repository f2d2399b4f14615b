"""Integer-valued Hilbert functions on P^8 and the constraint sieve.

Sequences are 1-indexed in the maths and 0-indexed here: ``h[0]`` is h_1.
For a subvariety V of degree d and dimension n, h_m is the dimension of
degree-m forms restricted to V and q_m = C(8+m, m) - h_m the dimension of
forms vanishing on V.
"""

from __future__ import annotations

import bisect
import dataclasses
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from .sums import SumSet

__all__ = [
    "AMBIENT_DIM",
    "CheckReport",
    "ConstraintResult",
    "ConstraintSet",
    "HilbertCandidate",
    "Inequality",
    "ambient_forms",
    "binomial_d",
    "builtin_constraints",
    "check_candidate",
    "newton_extend",
    "qivj",
    "search",
]

AMBIENT_DIM = 8


def ambient_forms(m: int) -> int:
    """dim H^0(O_{P^8}(m))."""
    return comb(AMBIENT_DIM + m, m)


def binomial_d(h: Sequence[int], n: int, delta: int) -> int:
    """h_{delta+n+1} - C(n,1) h_{delta+n} + ... + (-1)^n h_{delta+1}."""
    if delta < 0 or n < 0 or delta + n + 1 > len(h):
        raise IndexError(f"need h_1..h_{delta + n + 1}, have {len(h)} values")
    return sum((-1) ** i * comb(n, i) * h[delta + n - i] for i in range(n + 1))


def newton_extend(head: Sequence[int], horizon: int) -> list[int]:
    """Values at 1..horizon of the degree <= len(head)-1 polynomial through
    (1, head[0]), (2, head[1]), ..."""
    if horizon < len(head):
        raise ValueError(f"horizon {horizon} shorter than the {len(head)} given values")
    diffs = [list(head)]
    while len(diffs[-1]) > 1:
        row = diffs[-1]
        diffs.append([b - a for a, b in zip(row, row[1:])])
    # last entry of each difference row, top to bottom
    tail = [row[-1] for row in diffs]
    out = list(head)
    for _ in range(horizon - len(head)):
        for i in range(len(tail) - 2, -1, -1):
            tail[i] += tail[i + 1]
        out.append(tail[0])
    return out


def qivj(q: Sequence[int], i: int, j: int) -> int:
    """q_i(V_j) = q_i - C(j,1) q_{i-1} + ... + (-1)^j q_{i-j}, for i >= j+1."""
    if j < 1 or i < j + 1:
        raise ValueError(f"need j >= 1 and i >= j+1, got i={i}, j={j}")
    if i > len(q):
        raise IndexError(f"q_{i} requested, have {len(q)} values")
    return sum((-1) ** k * comb(j, k) * q[i - 1 - k] for k in range(j + 1))


def _affine(const, slope=0) -> tuple[Fraction, Fraction]:
    return Fraction(const), Fraction(slope)


def _fmt_affine(const: Fraction, slope: Fraction) -> str:
    if not slope:
        return str(const)
    s = "" if abs(slope) == 1 else f"{abs(slope)}"
    sign = "-" if slope < 0 else "+"
    return f"{const}{sign}{s}d" if const else f"{'-' if slope < 0 else ''}{s}d"


@dataclass(frozen=True)
class Inequality:
    """max(lower(d)) <= sum coeff * q_index <= min(upper(d)); upper may be strict."""

    name: str
    terms: tuple[tuple[int, int], ...]
    lower: tuple[tuple[Fraction, Fraction], ...]
    upper: tuple[tuple[Fraction, Fraction], ...]
    strict_upper: bool = False

    def lhs(self, q: Sequence[int]) -> int:
        return sum(c * q[i - 1] for i, c in self.terms)

    def bounds(self, d: int) -> tuple[Fraction, Fraction]:
        lo = max(a + b * d for a, b in self.lower)
        hi = min(a + b * d for a, b in self.upper)
        return lo, hi

    def holds(self, q: Sequence[int], d: int) -> bool:
        v = self.lhs(q)
        lo, hi = self.bounds(d)
        return lo <= v and (v < hi if self.strict_upper else v <= hi)

    def describe(self) -> str:
        lhs = "".join(
            f"{'+' if c > 0 else '-'}{'' if abs(c) == 1 else abs(c)}q{i}" for i, c in self.terms
        ).lstrip("+")
        lo = [_fmt_affine(*a) for a in self.lower]
        hi = [_fmt_affine(*a) for a in self.upper]
        lo_s = lo[0] if len(lo) == 1 else f"max({', '.join(lo)})"
        hi_s = hi[0] if len(hi) == 1 else f"min({', '.join(hi)})"
        return f"{lo_s} <= {lhs} {'<' if self.strict_upper else '<='} {hi_s}"

    @property
    def max_index(self) -> int:
        return max(i for i, _ in self.terms)


@dataclass(frozen=True)
class ConstraintSet:
    n: int
    horizon: int
    increase_h: bool = True
    increase_q: bool = True
    divisor: int = 1
    degree_cap: int | None = None
    q12_zero: bool = False
    q3_zero: bool = False
    q4_forces_d9: bool = False
    allow_zero_h: bool = True
    inequalities: tuple[Inequality, ...] = ()

    def __post_init__(self):
        if self.horizon < self.n + 1:
            raise ValueError(f"horizon {self.horizon} too short for degree {self.n}")
        for ineq in self.inequalities:
            if ineq.max_index > self.horizon:
                raise ValueError(f"{ineq.name} references q_{ineq.max_index} beyond horizon {self.horizon}")
        if self.divisor < 1:
            raise ValueError("divisor must be positive")

    def with_side_conditions(self) -> ConstraintSet:
        """Add q_1 = q_2 = 0 and, for n = 6, q_3 = 0 and q_4 > 0 => d = 9."""
        return dataclasses.replace(
            self, q12_zero=True, q3_zero=self.n == 6, q4_forces_d9=self.n == 6
        )

    def describe(self) -> list[dict]:
        out = [{"name": "membership", "rule": f"h_m in Sigma_m for 1 <= m <= {self.horizon}"}]
        if self.increase_h:
            out.append({"name": "increase-h", "rule": f"h_m <= h_m+1 for 1 <= m < {self.horizon}"})
        if self.increase_q:
            out.append({"name": "increase-q", "rule": f"q_m <= q_m+1 for 1 <= m < {self.horizon}"})
        if self.divisor > 1:
            out.append({"name": "divisibility", "rule": f"{self.divisor} | d"})
        if self.degree_cap is not None:
            out.append({"name": "degree-cap", "rule": f"d <= {self.degree_cap}"})
        if self.q12_zero:
            out.append({"name": "q1-q2", "rule": "q_1 = q_2 = 0"})
        if self.q3_zero:
            out.append({"name": "q3", "rule": "q_3 = 0"})
        if self.q4_forces_d9:
            out.append({"name": "q4-d9", "rule": "q_4 > 0 implies d = 9"})
        if not self.allow_zero_h:
            out.append({"name": "nonzero-h", "rule": "h_m > 0"})
        out.extend({"name": i.name, "rule": i.describe()} for i in self.inequalities)
        return out


_CURVE_4 = Inequality("curve-4", ((4, 1), (3, -3)), (_affine(0), _affine(125, -4)), (_affine(125, -2),))
_CURVE_5 = Inequality(
    "curve-5", ((5, 1), (4, -4), (3, 6)), (_affine(0), _affine(125, -5)), (_affine(126, Fraction(-5, 2)),)
)
_CURVE_6 = Inequality("curve-6", ((6, 1), (5, -5), (4, 10), (3, -10)), (_affine(0),), (_affine(83, -3),))
_STUPID_5 = Inequality("stupid-5", ((4, 1), (3, -3)), (_affine(0),), (_affine(126),), strict_upper=True)
_STUPID_6 = Inequality("stupid-6", ((5, 1), (4, -4)), (_affine(0),), (_affine(126),), strict_upper=True)


def builtin_constraints(n: int, strict: bool = False) -> ConstraintSet:
    """Constraint set used for the search in dimension n = 1..6.

    With ``strict=True`` only membership, monotonicity, divisibility, the
    degree cap and the linear q-bounds are imposed.  The default also
    imposes q_1 = q_2 = 0 and, for n = 6, q_3 = 0 and q_4 > 0 => d = 9;
    without the last one the n = 6 sieve is not empty.
    """
    if n in (1, 2, 3):
        c = ConstraintSet(n=n, horizon=6, increase_h=True, increase_q=False)
    elif n == 4:
        c = ConstraintSet(n=4, horizon=6, divisor=3, degree_cap=62, inequalities=(_CURVE_4,))
    elif n == 5:
        c = ConstraintSet(n=5, horizon=9, divisor=3, degree_cap=50, inequalities=(_CURVE_5, _STUPID_5))
    elif n == 6:
        c = ConstraintSet(n=6, horizon=9, divisor=9, degree_cap=27, inequalities=(_CURVE_6, _STUPID_6))
    else:
        raise ValueError(f"no built-in constraints for n={n}; expected 1..6")
    return c if strict else c.with_side_conditions()


@dataclass(frozen=True, order=True)
class HilbertCandidate:
    """A degree-n Hilbert function sampled at 1..horizon."""

    d: int
    h: tuple[int, ...]
    n: int = field(compare=False)

    @property
    def horizon(self) -> int:
        return len(self.h)

    @property
    def q(self) -> tuple[int, ...]:
        return tuple(ambient_forms(m) - hm for m, hm in enumerate(self.h, start=1))

    @classmethod
    def from_q(cls, n: int, d: int, q: Sequence[int]) -> HilbertCandidate:
        return cls(d=d, h=tuple(ambient_forms(m) - qm for m, qm in enumerate(q, start=1)), n=n)

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "h": list(self.h), "q": list(self.q)}

    @classmethod
    def from_json(cls, obj: Mapping) -> HilbertCandidate:
        return cls(d=obj["d"], h=tuple(obj["h"]), n=obj["n"])


@dataclass(frozen=True)
class ConstraintResult:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class CheckReport:
    results: tuple[ConstraintResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[ConstraintResult]:
        return [r for r in self.results if not r.passed]

    def __getitem__(self, name: str) -> ConstraintResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


def check_candidate(
    cand: HilbertCandidate, c: ConstraintSet, sums: Mapping[int, SumSet]
) -> CheckReport:
    """Evaluate every constraint of ``c`` on ``cand``, recording the numbers involved."""
    h, q, d, n, M = cand.h, cand.q, cand.d, c.n, c.horizon
    res: list[ConstraintResult] = []

    def add(name, ok, detail):
        res.append(ConstraintResult(name, bool(ok), detail))

    if len(h) < M:
        add("horizon", False, f"candidate has {len(h)} values, constraints need {M}")
        return CheckReport(tuple(res))
    diffs = [binomial_d(h, n, delta) for delta in range(M - n)]
    add(
        "degree",
        cand.n == n and d >= 1 and all(x == d for x in diffs),
        f"n={cand.n} (expected {n}), d={d}, n-th differences {diffs}",
    )
    add("nonnegative", all(x >= 0 for x in h[:M]) and all(x >= 0 for x in q[:M]), f"h={list(h[:M])}, q={list(q[:M])}")
    for m in range(1, M + 1):
        ok = h[m - 1] in sums[m] and (c.allow_zero_h or h[m - 1] != 0)
        add(f"membership[{m}]", ok, f"h_{m}={h[m - 1]} {'in' if ok else 'not in'} Sigma_{m}")
    for m in range(1, M):
        if c.increase_h:
            add(f"increase-h[{m}]", h[m - 1] <= h[m], f"h_{m}={h[m - 1]} <= h_{m + 1}={h[m]}")
        if c.increase_q:
            add(f"increase-q[{m}]", q[m - 1] <= q[m], f"q_{m}={q[m - 1]} <= q_{m + 1}={q[m]}")
    if c.divisor > 1:
        add("divisibility", d % c.divisor == 0, f"{c.divisor} | {d}")
    if c.degree_cap is not None:
        add("degree-cap", d <= c.degree_cap, f"{d} <= {c.degree_cap}")
    if c.q12_zero:
        add("q1-q2", q[0] == 0 and q[1] == 0, f"q_1={q[0]}, q_2={q[1]}")
    if c.q3_zero:
        add("q3", q[2] == 0, f"q_3={q[2]}")
    if c.q4_forces_d9:
        add("q4-d9", q[3] == 0 or d == 9, f"q_4={q[3]}, d={d}")
    for ineq in c.inequalities:
        lo, hi = ineq.bounds(d)
        v = ineq.lhs(q)
        add(ineq.name, ineq.holds(q, d), f"{lo} <= {v} {'<' if ineq.strict_upper else '<='} {hi}")
    return CheckReport(tuple(res))


def _search_branch(h1: int, n: int, values: dict, c: ConstraintSet, sums) -> list[HilbertCandidate]:
    M = c.horizon
    members = {m: frozenset(v) for m, v in values.items()}
    step = {m: ambient_forms(m + 1) - ambient_forms(m) for m in range(1, M)}
    found = []

    def window(m: int, prev: int) -> tuple[int, int | None]:
        # admissible range for h_m given h_{m-1} = prev
        lo = prev if c.increase_h else None
        hi = prev + step[m - 1] if c.increase_q else None
        return lo, hi

    def finish(prefix: list[int]) -> None:
        rest = binomial_d(prefix + [0], n, 0)
        lo, hi = window(n + 1, prefix[-1])
        if c.degree_cap is not None:
            options = [(d, d - rest) for d in range(c.divisor, c.degree_cap + 1, c.divisor)]
            options = [(d, v) for d, v in options if v in members[n + 1]]
        else:
            options = [(v + rest, v) for v in values[n + 1]]
            options = [(d, v) for d, v in options if d >= 1 and d % c.divisor == 0]
        for d, v in options:
            if (lo is not None and v < lo) or (hi is not None and v > hi):
                continue
            h = newton_extend(prefix + [v], M)
            ok = True
            for m in range(n + 2, M + 1):
                if h[m - 1] not in members[m]:
                    ok = False
                    break
                wlo, whi = window(m, h[m - 2])
                if (wlo is not None and h[m - 1] < wlo) or (whi is not None and h[m - 1] > whi):
                    ok = False
                    break
            if not ok:
                continue
            cand = HilbertCandidate(d=d, h=tuple(h), n=n)
            if check_candidate(cand, c, sums).passed:
                found.append(cand)

    def extend(prefix: list[int]) -> None:
        m = len(prefix) + 1
        if m == n + 1:
            finish(prefix)
            return
        lo, hi = window(m, prefix[-1])
        vals = values[m]
        start = bisect.bisect_left(vals, lo) if lo is not None else 0
        for v in vals[start:]:
            if hi is not None and v > hi:
                break
            prefix.append(v)
            extend(prefix)
            prefix.pop()

    extend([h1])
    return found


def search(
    n: int,
    sums: Mapping[int, SumSet],
    constraints: ConstraintSet | None = None,
    workers: int = 1,
) -> list[HilbertCandidate]:
    """All degree-n candidates passing every constraint, sorted by (d, h).

    Tuples (h_1, ..., h_{n+1}) are enumerated with monotonicity cuts, d is
    read off as the n-th difference, and the polynomial is extended to the
    horizon before the remaining checks.  ``workers > 1`` splits the work
    over h_1 in a process pool; the result is identical either way.
    """
    c = constraints if constraints is not None else builtin_constraints(n)
    if c.n != n:
        raise ValueError(f"constraint set is for n={c.n}, not {n}")
    missing = [m for m in range(1, c.horizon + 1) if m not in sums]
    if missing:
        raise KeyError(f"missing Sigma_m for m in {missing}")
    values = {
        m: tuple(sorted(s for s in sums[m].achievable if c.allow_zero_h or s))
        for m in range(1, c.horizon + 1)
    }
    sums = {m: sums[m] for m in range(1, c.horizon + 1)}
    firsts = values[1]
    if workers > 1 and len(firsts) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_search_branch, firsts, *zip(*[(n, values, c, sums)] * len(firsts))))
    else:
        parts = [_search_branch(h1, n, values, c, sums) for h1 in firsts]
    return sorted({cand for part in parts for cand in part})
