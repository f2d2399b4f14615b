"""Adams operations, symmetric and exterior powers, decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .chartab import CharacterTable, ClassFunction, inner_products
from .cyclo import Cyclotomic
from .sums import DimensionProfile

__all__ = [
    "CenterCheck",
    "CharacterError",
    "Decomposition",
    "adams",
    "decompose",
    "delta_profile",
    "ext_power",
    "ext_powers",
    "semi_invariant_count",
    "semi_invariant_counts",
    "sym_power",
    "sym_powers",
    "tensor",
    "verify_center_dims",
]


class CharacterError(ValueError):
    """A class function failed to behave like a character of its table."""


def adams(f: ClassFunction, k: int) -> ClassFunction:
    """psi^k f: g -> f(g^k)."""
    pm = f.table.power_map(k)
    return ClassFunction(f.table, (f.values[pm[c]] for c in range(len(pm))))


def _newton(f: ClassFunction, kmax: int, sign: int) -> list[ClassFunction]:
    # k e_k = sum_{i=1..k} sign^(i-1) psi^i(f) e_{k-i}
    if kmax < 0:
        raise ValueError(f"power must be non-negative, got {kmax}")
    out = [f.table.trivial()]
    psis = [adams(f, i) for i in range(1, kmax + 1)]
    ncl = f.table.n_classes
    for k in range(1, kmax + 1):
        acc = [Cyclotomic.rational(0)] * ncl
        for i in range(1, k + 1):
            coef = 1 if sign == 1 or i % 2 == 1 else -1
            psi, prev = psis[i - 1].values, out[k - i].values
            for c in range(ncl):
                term = psi[c] * prev[c]
                acc[c] = acc[c] + term if coef == 1 else acc[c] - term
        vals = [v / k for v in acc]
        bad = next((c for c, v in enumerate(vals) if not v.is_integral()), None)
        if bad is not None:
            raise CharacterError(
                f"Newton recurrence at k={k}: class {bad} value {vals[bad]} is not an algebraic integer"
            )
        out.append(ClassFunction(f.table, vals))
    return out


def sym_powers(f: ClassFunction, kmax: int) -> list[ClassFunction]:
    """[Sym^0 f, ..., Sym^kmax f]."""
    return _newton(f, kmax, 1)


def ext_powers(f: ClassFunction, kmax: int) -> list[ClassFunction]:
    """[Lambda^0 f, ..., Lambda^kmax f]."""
    return _newton(f, kmax, -1)


def sym_power(f: ClassFunction, k: int) -> ClassFunction:
    return sym_powers(f, k)[k]


def ext_power(f: ClassFunction, k: int) -> ClassFunction:
    return ext_powers(f, k)[k]


def tensor(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    if f.table is not g.table:
        raise ValueError("tensor product of class functions on different tables")
    return f * g


@dataclass(frozen=True)
class Decomposition:
    table: CharacterTable
    multiplicities: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return sum(m * d for m, d in zip(self.multiplicities, self.table.degrees))

    def constituents(self) -> list[tuple[str, int, int]]:
        """(name, degree, multiplicity) for each constituent present."""
        t = self.table
        return [(t.names[i], t.degree(i), m) for i, m in enumerate(self.multiplicities) if m]

    def profile(self) -> DimensionProfile:
        counts: dict[int, int] = {}
        for _, deg, m in self.constituents():
            counts[deg] = counts.get(deg, 0) + m
        return DimensionProfile.from_counts(counts)

    def reconstruct(self) -> ClassFunction:
        t = self.table
        acc = [Cyclotomic.rational(0)] * t.n_classes
        for i, m in enumerate(self.multiplicities):
            if m:
                acc = [a + m * v for a, v in zip(acc, t.irreducibles[i])]
        return ClassFunction(t, acc)

    @property
    def is_irreducible(self) -> bool:
        return sum(self.multiplicities) == 1


def decompose(f: ClassFunction) -> Decomposition:
    """Multiplicities <f, chi_i>; each must be a non-negative rational integer."""
    t = f.table
    row = inner_products(t, [f.values], t.irreducibles)[0]
    mults = []
    for i, v in enumerate(row):
        r = v.as_rational()
        if r is None or r.denominator != 1:
            raise CharacterError(f"non-integral multiplicity {v} of {t.names[i]}")
        if r < 0:
            raise CharacterError(f"negative multiplicity {r} of {t.names[i]}")
        mults.append(int(r))
    dec = Decomposition(t, tuple(mults))
    if dec.reconstruct() != f:
        raise CharacterError("decomposition does not reconstruct the input")
    return dec


def _rep(t: CharacterTable, rep: ClassFunction | str | None) -> ClassFunction:
    if rep is None:
        return t.designated_character()
    if isinstance(rep, str):
        return t.character(rep)
    return rep


def delta_profile(t: CharacterTable, k: int, rep: ClassFunction | str | None = None) -> DimensionProfile:
    """Constituent dimensions of Sym^k(rep), with multiplicity.

    ``rep`` defaults to the table's designated representation.
    """
    if not 1 <= k <= t.k_max - 1:
        raise ValueError(f"k must lie in 1..{t.k_max - 1}, got {k}")
    return decompose(sym_power(_rep(t, rep), k)).profile()


def semi_invariant_count(t: CharacterTable, d: int, rep: ClassFunction | str | None = None) -> int:
    """Number of one-dimensional constituents of Sym^d(rep), with multiplicity."""
    if not 1 <= d <= t.k_max - 1:
        raise ValueError(f"degree must lie in 1..{t.k_max - 1}, got {d}")
    dec = decompose(sym_power(_rep(t, rep), d))
    return sum(m for _, deg, m in dec.constituents() if deg == 1)


def semi_invariant_counts(t: CharacterTable, max_degree: int, rep=None) -> dict[int, int]:
    """semi_invariant_count for d = 1..max_degree, sharing one Newton run."""
    if not 1 <= max_degree <= t.k_max - 1:
        raise ValueError(f"degree must lie in 1..{t.k_max - 1}, got {max_degree}")
    powers = sym_powers(_rep(t, rep), max_degree)
    counts = {}
    for d in range(1, max_degree + 1):
        dec = decompose(powers[d])
        counts[d] = sum(m for _, deg, m in dec.constituents() if deg == 1)
    return counts


class CenterCheck(NamedTuple):
    ok: bool
    offender: str | None = None

    def __bool__(self):
        return self.ok


def verify_center_dims(t: CharacterTable, modulus: int = 9) -> CenterCheck:
    """Every irreducible on which some central element acts by a non-trivial
    scalar must have degree divisible by ``modulus``."""
    central = [c for c in range(1, t.n_classes) if t.classes[c].size == 1]
    for i, row in enumerate(t.irreducibles):
        deg = t.degree(i)
        if any(row[c] != deg for c in central) and deg % modulus:
            return CenterCheck(False, t.names[i])
    return CenterCheck(True)

