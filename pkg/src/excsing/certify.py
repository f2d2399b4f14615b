"""End-to-end pipeline producing an auditable certificate."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Mapping

from . import __version__
from .chartab import CharacterTable, load_table
from .exclusion import TensorSplit, case_from_candidate, exclude_case
from .hilbert import HilbertCandidate, builtin_constraints, check_candidate, search
from .bundled import (
    TABLE_DATA,
    dimension_sum_issues,
    file_digest,
    load_profile_data,
    sum_sets,
)
from .reps import decompose, delta_profile, semi_invariant_counts, sym_power, tensor, verify_center_dims
from .sums import DimensionProfile

__all__ = [
    "Certificate",
    "Step",
    "EXPECTED_SURVIVORS",
    "certify",
    "eliminate_extremes",
    "lct_upper_bound",
    "table_tensor_split",
]

SCHEMA = 1
AMBIENT = 8
LOWER_BOUND = Fraction(10, 9)
VERDICT_NOTE = (
    "certifies the computational lemmas only; the geometric reductions "
    "from the lct bound to these lemmas are assumed, not machine-checked"
)

# (n, d, leading q values) of the two candidates the sieve must leave
EXPECTED_SURVIVORS = (
    (4, 36, (0, 0, 0, 45, 270)),
    (5, 45, (0, 0, 0, 0, 0, 39, 270)),
)


def lct_upper_bound(semi_inv_degree: int, n: int) -> Fraction:
    """lct(P^n, G) <= degree / (n + 1) when a semi-invariant of that degree exists."""
    if semi_inv_degree < 1 or n < 1:
        raise ValueError("degree and dimension must be positive")
    return Fraction(semi_inv_degree, n + 1)


@dataclass
class Step:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": self.details}

    @classmethod
    def from_json(cls, obj: Mapping) -> Step:
        return cls(obj["name"], obj["passed"], obj["details"])


@dataclass
class Certificate:
    inputs: dict
    steps: list[Step]
    verdict: dict | None
    tool_version: str = __version__
    schema: int = SCHEMA

    @property
    def passed(self) -> bool:
        return self.verdict is not None

    def failed_step(self) -> Step | None:
        return next((s for s in self.steps if not s.passed), None)

    def to_json(self) -> dict:
        return {
            "schema": self.schema,
            "toolVersion": self.tool_version,
            "inputs": self.inputs,
            "steps": [s.to_json() for s in self.steps],
            "verdict": self.verdict,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, obj: Mapping) -> Certificate:
        return cls(
            inputs=obj["inputs"],
            steps=[Step.from_json(s) for s in obj["steps"]],
            verdict=obj["verdict"],
            tool_version=obj["toolVersion"],
            schema=obj["schema"],
        )

    @classmethod
    def loads(cls, text: str) -> Certificate:
        return cls.from_json(json.loads(text))


def eliminate_extremes(counts: Mapping[int, int], below: int = 12) -> Step:
    """No semi-invariants below degree 12 rules out n = 0 and n = 7."""
    missing = [d for d in range(1, below) if d not in counts]
    positive = {d: counts[d] for d in range(1, below) if counts.get(d, 0) > 0}
    return Step(
        "eliminate-extremes",
        not missing and not positive,
        {
            "checked_degrees": [1, below - 1],
            "missing": missing,
            "positive": {str(d): c for d, c in positive.items()},
            "excluded_dimensions": [0, 7] if not missing and not positive else [],
        },
    )


def _constituent(t: CharacterTable, degree: int, dim: int):
    dec = decompose(sym_power(t.designated_character(), degree))
    hits = [name for name, deg, m in dec.constituents() if deg == dim]
    if len(hits) != 1 or dict((n, m) for n, _, m in dec.constituents())[hits[0]] != 1:
        raise ValueError(f"Sym^{degree} has no unique {dim}-dimensional constituent")
    return t.character(hits[0])


def table_tensor_split(t: CharacterTable, degree: int, dim: int) -> TensorSplit:
    """Split of U (x) W for W the unique dim-dimensional constituent of Sym^degree."""
    w = _constituent(t, degree, dim)
    dec = decompose(tensor(t.designated_character(), w))
    rank = int(t.designated_character().degree)
    return TensorSplit(source_degree=degree, source_dim=dim, parts=tuple(dec.profile().dims), rank=rank)


def _matches(cand: HilbertCandidate, expected) -> bool:
    n, d, q = expected
    return cand.n == n and cand.d == d and cand.q[: len(q)] == q


def certify(
    mode: str = "paper-data",
    table_path: str | Path | None = None,
    profile_path: str | Path | None = None,
    workers: int = 1,
) -> Certificate:
    """Run the whole pipeline; the verdict is present only when every step passes."""
    if mode not in ("paper-data", "table"):
        raise ValueError(f"unknown mode {mode!r}")
    steps: list[Step] = []
    inputs: dict = {"mode": mode}

    def finish(verdict=None) -> Certificate:
        return Certificate(inputs=inputs, steps=steps, verdict=verdict)

    def record(step: Step) -> bool:
        steps.append(step)
        return step.passed

    data = load_profile_data(profile_path)
    inputs["profile_data"] = data.digest
    delta = dict(data.delta)
    tensors = dict(data.tensors)

    issues = dimension_sum_issues(delta)
    if not record(Step("dimension-sums", not issues, {"issues": issues, "degrees": sorted(delta)})):
        return finish()

    if mode == "table":
        path = Path(table_path) if table_path is not None else TABLE_DATA
        inputs["table"] = file_digest(path)
        table = load_table(path)
        rows = {}
        ok = True
        for k in sorted(delta):
            computed = delta_profile(table, k)
            rows[str(k)] = {"computed": computed.to_json(), "fixture": delta[k].to_json()}
            ok &= computed == delta[k]
        if not record(Step("delta-cross-check", ok, {"designated": table.designated, "profiles": rows})):
            return finish()
        others = [n for n, d in zip(table.names, table.degrees) if d == 9 and n != table.designated]
        alt = {n: all(delta_profile(table, k, n) == delta[k] for k in sorted(delta)) for n in others}
        if not record(Step("delta-other-nine", all(alt.values()), {"representations": alt})):
            return finish()
        center = verify_center_dims(table)
        if not record(Step("center-dims", center.ok, {"offender": center.offender})):
            return finish()
        tens_rows = {}
        ok = True
        for key, split in sorted(tensors.items()):
            computed = table_tensor_split(table, *key)
            tens_rows[f"{key[0]}:{key[1]}"] = {"computed": list(computed.parts), "fixture": list(split.parts)}
            ok &= computed.parts == split.parts
        if not record(Step("tensor-cross-check", ok, {"splits": tens_rows})):
            return finish()
        counts = semi_invariant_counts(table, table.k_max - 1)
        first = next((d for d in sorted(counts) if counts[d] > 0), None)
    else:
        counts = dict(data.semi_counts)
        first = data.first_semi_degree or None

    if not record(
        Step(
            "semi-invariants",
            first is not None and all(counts.get(d, 0) == 0 for d in range(1, first)),
            {"counts": {str(d): c for d, c in sorted(counts.items())}, "first_degree": first},
        )
    ):
        return finish()
    if not record(eliminate_extremes(counts)):
        return finish()
    upper = lct_upper_bound(first, AMBIENT)
    record(Step("upper-bound", True, {"semi_invariant_degree": first, "bound": str(upper)}))

    sums = sum_sets(delta)
    survivors: list[HilbertCandidate] = []
    for n in range(1, 7):
        strict_c = builtin_constraints(n, strict=True)
        full_c = builtin_constraints(n)
        found = search(n, sums, full_c, workers=workers)
        strict = search(n, sums, strict_c, workers=workers)
        extra = []
        for cand in strict:
            if cand not in found:
                failed = [r.name for r in check_candidate(cand, full_c, sums).failures]
                extra.append({**cand.to_json(), "excluded_by": failed})
        survivors.extend(found)
        record(
            Step(
                f"search[{n}]",
                True,
                {
                    "constraints": full_c.describe(),
                    "solutions": [c.to_json() for c in found],
                    "strict_only": extra,
                },
            )
        )

    expected_hits = [[c.to_json() for c in survivors if _matches(c, e)] for e in EXPECTED_SURVIVORS]
    unexpected = [c.to_json() for c in survivors if not any(_matches(c, e) for e in EXPECTED_SURVIVORS)]
    ok = all(len(h) == 1 for h in expected_hits) and not unexpected
    if not record(
        Step(
            "survivors",
            ok,
            {
                "expected": [{"n": n, "d": d, "q": list(q)} for n, d, q in EXPECTED_SURVIVORS],
                "found": [c.to_json() for c in survivors],
                "unexpected": unexpected,
            },
        )
    ):
        return finish()

    for cand in survivors:
        ref = exclude_case(case_from_candidate(cand, delta, tensors))
        if not record(Step(f"exclusion[{cand.n}]", ref.refuted, {"case": cand.to_json(), **ref.to_json()})):
            return finish()

    return finish(
        {
            "lct_lower_bound": str(LOWER_BOUND),
            "lct_upper_bound": str(upper),
            "statement": f"{upper} >= lct(P^8, G) >= {LOWER_BOUND}",
            "note": VERDICT_NOTE,
        }
    )


def profiles_from_table(t: CharacterTable, kmax: int = 9) -> dict[int, DimensionProfile]:
    return {k: delta_profile(t, k) for k in range(1, kmax + 1)}
