"""Bundled data: the transcribed constituent profiles and the exported table."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Mapping

from .exclusion import TensorSplit
from .hilbert import ambient_forms
from .sums import DimensionProfile, SumSet, sigma

__all__ = [
    "ProfileData",
    "PROFILE_DATA",
    "TABLE_DATA",
    "dimension_sum_issues",
    "file_digest",
    "load_profile_data",
    "sum_sets",
]

_DATA = resources.files("excsing") / "data"
PROFILE_DATA = Path(str(_DATA / "delta_paper.json"))
TABLE_DATA = Path(str(_DATA / "g3_sp43.json"))


def file_digest(path: str | Path) -> str:
    return "sha256:" + hashlib.sha256(Path(path).read_bytes()).hexdigest()


@dataclass(frozen=True)
class ProfileData:
    delta: dict[int, DimensionProfile]
    tensors: dict[tuple[int, int], TensorSplit]
    semi_counts: dict[int, int]
    first_semi_degree: int
    digest: str


def load_profile_data(path: str | Path | None = None) -> ProfileData:
    path = Path(path) if path is not None else PROFILE_DATA
    raw = json.loads(path.read_text(encoding="utf-8"))
    delta = {
        int(k): DimensionProfile(tuple((d, m) for d, m in v["profile"]))
        for k, v in raw["delta"].items()
    }
    tensors = {}
    for dim, v in raw.get("tensors", {}).items():
        split = TensorSplit(source_degree=v["source_degree"], source_dim=int(dim), parts=tuple(v["parts"]))
        if "irreducible" in v and v["irreducible"] != split.irreducible:
            raise ValueError(f"tensor entry {dim}: irreducible flag disagrees with its parts")
        tensors[(split.source_degree, split.source_dim)] = split
    semi = raw.get("semi_invariants", {})
    return ProfileData(
        delta=dict(sorted(delta.items())),
        tensors=tensors,
        semi_counts={int(k): v for k, v in semi.get("counts", {}).items()},
        first_semi_degree=semi.get("first_degree", 0),
        digest=file_digest(path),
    )


def dimension_sum_issues(delta: Mapping[int, DimensionProfile]) -> list[str]:
    """Profiles whose total differs from dim Sym^k of a 9-dimensional space."""
    return [
        f"Delta_{k} sums to {p.total}, expected {ambient_forms(k)}"
        for k, p in sorted(delta.items())
        if p.total != ambient_forms(k)
    ]


def sum_sets(delta: Mapping[int, DimensionProfile]) -> dict[int, SumSet]:
    return {k: sigma(p) for k, p in sorted(delta.items())}
