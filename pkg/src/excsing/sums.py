"""Dimension multisets and their achievable partial sums."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = ["DimensionProfile", "SumSet", "SIGMA_GUARD", "sigma", "realizations", "remove"]

SIGMA_GUARD = 10**6


@dataclass(frozen=True)
class DimensionProfile:
    """Multiset of positive dimensions stored as sorted (dim, mult) pairs."""

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        entries = tuple((int(d), int(m)) for d, m in self.entries)
        dims = [d for d, _ in entries]
        if dims != sorted(set(dims)):
            raise ValueError(f"profile dims must be distinct and sorted: {dims}")
        if any(d < 1 or m < 1 for d, m in entries):
            raise ValueError(f"profile dims and mults must be positive: {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_dims(cls, dims: Iterable[int]) -> DimensionProfile:
        return cls(tuple(sorted(Counter(dims).items())))

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> DimensionProfile:
        return cls(tuple(sorted((d, m) for d, m in counts.items() if m)))

    @property
    def total(self) -> int:
        return sum(d * m for d, m in self.entries)

    @property
    def dims(self) -> list[int]:
        """Expanded, sorted list of dimensions."""
        return [d for d, m in self.entries for _ in range(m)]

    def mult(self, dim: int) -> int:
        return dict(self.entries).get(dim, 0)

    def __contains__(self, dim: int) -> bool:
        return self.mult(dim) > 0

    def __len__(self) -> int:
        return sum(m for _, m in self.entries)

    def __str__(self):
        return "[" + ", ".join(str(d) if m == 1 else f"{m}x{d}" for d, m in self.entries) + "]"

    def to_json(self) -> list[list[int]]:
        return [[d, m] for d, m in self.entries]


@dataclass(frozen=True)
class SumSet:
    profile: DimensionProfile
    achievable: tuple[int, ...]

    def __contains__(self, s: int) -> bool:
        return s in self._lookup

    @property
    def _lookup(self) -> frozenset[int]:
        cached = self.__dict__.get("_lookup_cache")
        if cached is None:
            cached = frozenset(self.achievable)
            object.__setattr__(self, "_lookup_cache", cached)
        return cached

    def __len__(self) -> int:
        return len(self.achievable)

    def __iter__(self):
        return iter(self.achievable)


def sigma(p: DimensionProfile, guard: int = SIGMA_GUARD) -> SumSet:
    """All sums sum(r_i' * m_i) with 0 <= r_i' <= r_i.

    Bounded knapsack over a presence bitmask: bit s is set iff s is a
    partial sum; each copy of a part shifts-and-ors the mask.
    """
    if p.total > guard:
        raise ValueError(f"profile total {p.total} exceeds guard {guard}")
    mask = 1
    for d, m in p.entries:
        for _ in range(m):
            mask |= mask << d
    bits = bin(mask)[2:][::-1]
    return SumSet(p, tuple(s for s, b in enumerate(bits) if b == "1"))


def realizations(p: DimensionProfile, target: int) -> list[DimensionProfile]:
    """Every sub-multiset of ``p`` summing to ``target``, in a fixed DFS order."""
    entries = p.entries
    suffix = [0] * (len(entries) + 1)
    for i in range(len(entries) - 1, -1, -1):
        d, m = entries[i]
        suffix[i] = suffix[i + 1] + d * m

    out: list[DimensionProfile] = []
    chosen = [0] * len(entries)

    def dfs(i: int, remaining: int) -> None:
        if remaining == 0:
            out.append(DimensionProfile.from_counts({entries[j][0]: chosen[j] for j in range(i)}))
            return
        if i == len(entries) or remaining > suffix[i] or remaining < 0:
            return
        d, m = entries[i]
        for r in range(min(m, remaining // d), -1, -1):
            chosen[i] = r
            dfs(i + 1, remaining - r * d)
        chosen[i] = 0

    if target >= 0:
        dfs(0, target)
    return out


def remove(p: DimensionProfile, used: DimensionProfile) -> DimensionProfile:
    """Multiset difference p - used."""
    counts = dict(p.entries)
    for d, m in used.entries:
        if counts.get(d, 0) < m:
            raise ValueError(f"cannot remove {m}x{d} from {p}")
        counts[d] -= m
    return DimensionProfile.from_counts(counts)
