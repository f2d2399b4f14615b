"""Refuting surviving Hilbert-function candidates by constituent accounting.

Three inference rules are used, and each trace step names the one it applies:

* ``realize``: the q_m-dimensional space of degree-m forms vanishing on V is
  a subrepresentation of Sym^m, so q_m must be a sum of constituents of
  Sym^m.  Every realization is a branch.
* ``non-zero map``: for a constituent W of that space, multiplication by
  linear forms gives a non-zero equivariant map U (x) W -> degree m+1 forms
  on V.  Its image is a non-empty sum of pieces of U (x) W that also occur in
  Sym^(m+1).  When U (x) W is irreducible the map is injective
  (``irreducible-source injectivity``).
* ``accounting``: the rest of the degree m+1 space, of dimension
  q_{m+1} - dim(image), must be realizable by the constituents of
  Sym^(m+1) not already used by the image.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

from .hilbert import HilbertCandidate
from .sums import DimensionProfile, realizations, remove

__all__ = [
    "CaseData",
    "Forced",
    "Refutation",
    "TensorSplit",
    "case_from_candidate",
    "exclude_case",
    "forced_constituents",
    "image_dimension_options",
    "image_options",
]


@dataclass(frozen=True)
class TensorSplit:
    """Constituent dimensions of U (x) W for W the ``source_dim`` constituent of Sym^source_degree."""

    source_degree: int
    source_dim: int
    parts: tuple[int, ...]
    rank: int = 9

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(sorted(self.parts)))
        if sum(self.parts) != self.rank * self.source_dim:
            raise ValueError(
                f"U (x) W parts {list(self.parts)} sum to {sum(self.parts)}, "
                f"expected {self.rank} x {self.source_dim}"
            )

    @property
    def irreducible(self) -> bool:
        return len(self.parts) == 1

    def to_json(self) -> dict:
        return {
            "source_degree": self.source_degree,
            "source_dim": self.source_dim,
            "parts": list(self.parts),
            "irreducible": self.irreducible,
        }


@dataclass(frozen=True)
class CaseData:
    n: int
    q: tuple[int, ...]
    profiles: Mapping[int, DimensionProfile]
    tensors: Mapping[tuple[int, int], TensorSplit] = field(default_factory=dict)

    @property
    def source_degree(self) -> int | None:
        """First m with q_m > 0."""
        return next((m for m, x in enumerate(self.q, start=1) if x > 0), None)

    def label(self) -> dict:
        return {"n": self.n, "q": list(self.q)}


class Forced(NamedTuple):
    realizations: list[DimensionProfile]
    forced: DimensionProfile


def forced_constituents(q_m: int, delta_m: DimensionProfile) -> Forced:
    """Realizations of q_m inside delta_m and the constituents common to all of them."""
    if q_m < 0:
        raise ValueError(f"q_m must be non-negative, got {q_m}")
    reals = realizations(delta_m, q_m)
    if not reals:
        return Forced(reals, DimensionProfile())
    common = {d: min(r.mult(d) for r in reals) for d, _ in reals[0].entries}
    return Forced(reals, DimensionProfile.from_counts(common))


def image_options(parts: tuple[int, ...], delta_next: DimensionProfile) -> list[DimensionProfile]:
    """Non-empty sub-multisets of ``parts`` that fit inside ``delta_next``."""
    pool = DimensionProfile.from_dims(parts)
    ranges = [range(min(m, delta_next.mult(d)) + 1) for d, m in pool.entries]
    out = []
    for counts in itertools.product(*ranges):
        if any(counts):
            out.append(DimensionProfile.from_counts({d: c for (d, _), c in zip(pool.entries, counts)}))
    return sorted(out, key=lambda p: (p.total, p.entries))


def image_dimension_options(parts, delta_next: DimensionProfile) -> frozenset[int]:
    """Possible dimensions of the image of a non-zero map out of U (x) W.

    Empty means the map cannot be non-zero: a contradiction by itself.
    """
    return frozenset(p.total for p in image_options(tuple(parts), delta_next))


@dataclass(frozen=True)
class Refutation:
    verdict: str
    trace: tuple[dict, ...]
    open_branch: dict | None = None

    @property
    def refuted(self) -> bool:
        return self.verdict == "refuted"

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "trace": list(self.trace)}
        if self.open_branch is not None:
            out["open_branch"] = self.open_branch
        return out


def _close_with(split: TensorSplit, delta_next: DimensionProfile, q_next: int) -> tuple[list[dict], dict | None]:
    rule = "irreducible-source injectivity" if split.irreducible else "non-zero map"
    options = image_options(split.parts, delta_next)
    steps = [
        {
            "rule": rule,
            "source_dim": split.source_dim,
            "tensor_parts": list(split.parts),
            "image_options": sorted({o.total for o in options}),
        }
    ]
    if not options:
        steps.append({"rule": "non-zero map", "closed": True, "reason": "no piece of U (x) W occurs in the target"})
        return steps, None
    open_branch = None
    for image in options:
        residual = q_next - image.total
        step = {"rule": "accounting", "image": image.dims, "image_dim": image.total, "residual": residual}
        if residual < 0:
            step.update(closed=True, reason="image larger than the space it lands in")
        else:
            available = remove(delta_next, image)
            reals = realizations(available, residual)
            step["available"] = available.to_json()
            step["closed"] = not reals
            if reals:
                step["witness"] = reals[0].dims
                if open_branch is None:
                    open_branch = step
        steps.append(step)
    return steps, open_branch


def exclude_case(case: CaseData) -> Refutation:
    trace: list[dict] = []
    m = case.source_degree
    if m is None or m + 1 > len(case.q):
        return Refutation("inconclusive", (), {"reason": "no degree with q_m > 0 inside the horizon"})
    for deg in (m, m + 1):
        if deg not in case.profiles:
            return Refutation("inconclusive", (), {"reason": f"no constituent profile for degree {deg}"})
    q_m, q_next = case.q[m - 1], case.q[m]
    forced = forced_constituents(q_m, case.profiles[m])
    trace.append(
        {
            "rule": "realize",
            "degree": m,
            "q": q_m,
            "realizations": [r.dims for r in forced.realizations],
            "forced": forced.forced.dims,
        }
    )
    if not forced.realizations:
        trace.append({"rule": "realize", "closed": True, "reason": f"q_{m}={q_m} is not a sum of constituents"})
        return Refutation("refuted", tuple(trace))

    for branch, real in enumerate(forced.realizations):
        first_open = None
        closed = False
        for w in sorted({d for d, _ in real.entries}, reverse=True):
            split = case.tensors.get((m, w))
            if split is None:
                continue
            steps, open_branch = _close_with(split, case.profiles[m + 1], q_next)
            attempt = {"branch": branch, "realization": real.dims, "constituent": w, "degree": m + 1, "q": q_next}
            if open_branch is None:
                trace.append({**attempt, "rule": "branch", "closed": True, "steps": steps})
                closed = True
                break
            if first_open is None:
                first_open = {**attempt, "rule": "branch", "closed": False, "steps": steps, "open": open_branch}
        if not closed:
            if first_open is None:
                first_open = {
                    "branch": branch,
                    "realization": real.dims,
                    "rule": "branch",
                    "closed": False,
                    "reason": "no tensor decomposition available for any constituent",
                }
            trace.append(first_open)
            return Refutation("inconclusive", tuple(trace), first_open)
    return Refutation("refuted", tuple(trace))


def case_from_candidate(
    cand: HilbertCandidate,
    profiles: Mapping[int, DimensionProfile],
    tensors: Mapping[tuple[int, int], TensorSplit],
) -> CaseData:
    return CaseData(n=cand.n, q=cand.q, profiles=dict(profiles), tensors=dict(tensors))
