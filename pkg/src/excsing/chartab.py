"""Character tables: data model, JSON ingestion and validation.

A table file is UTF-8 JSON::

    {"order": N, "exponent": E,
     "classes": [{"size": s, "elementOrder": o}, ...],
     "powerMaps": {"2": [...], "3": [...], ...},
     "irreducibles": [{"name": "X9a", "values": [<cyclotomic>, ...]}, ...],
     "designated": "X9a"}

Class index 0 must be the identity class.  Cyclotomic values use the
``{"n": .., "terms": [[k, num, den], ...]}`` form of :mod:`excsing.cyclo`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .cyclo import Cyclotomic, _power_table, euler_phi

__all__ = [
    "ClassFunction",
    "CharacterTable",
    "ConjClass",
    "TableParseError",
    "TableValidationError",
    "DEFAULT_K_MAX",
    "inner_products",
    "load_table",
    "parse_table",
    "power_class",
]

DEFAULT_K_MAX = 13


class TableParseError(ValueError):
    """Malformed table file.  Carries the JSON line and/or field path."""

    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class TableValidationError(ValueError):
    """A table violates one of its invariants; ``invariant`` names which."""

    def __init__(self, invariant: str, message: str):
        self.invariant = invariant
        super().__init__(f"{invariant}: {message}")


def _primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if all(p % q for q in range(2, int(p**0.5) + 1))]


def _factor(k: int) -> list[int]:
    out, p = [], 2
    while p * p <= k:
        while k % p == 0:
            out.append(p)
            k //= p
        p += 1
    if k > 1:
        out.append(k)
    return out


@dataclass(frozen=True)
class ConjClass:
    size: int
    element_order: int


@dataclass(frozen=True, eq=False)
class CharacterTable:
    order: int
    classes: tuple[ConjClass, ...]
    power_maps: dict[int, tuple[int, ...]]
    irreducibles: tuple[tuple[Cyclotomic, ...], ...]
    names: tuple[str, ...]
    exponent: int
    designated: str | None = None
    k_max: int = DEFAULT_K_MAX
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    def degree(self, i: int) -> int:
        return int(self.irreducibles[i][0].as_rational())

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(i) for i in range(len(self.irreducibles)))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no irreducible named {name!r}") from None

    def character(self, which: int | str) -> ClassFunction:
        i = self.index(which) if isinstance(which, str) else which
        return ClassFunction(self, self.irreducibles[i])

    def characters(self) -> list[ClassFunction]:
        return [ClassFunction(self, row) for row in self.irreducibles]

    def designated_character(self) -> ClassFunction:
        if self.designated is None:
            raise KeyError("table has no designated representation")
        return self.character(self.designated)

    def trivial(self) -> ClassFunction:
        return ClassFunction(self, (Cyclotomic.rational(1),) * self.n_classes)

    def power_map(self, k: int) -> tuple[int, ...]:
        """Class of g^k for each class, composed from the prime maps."""
        if k < 1:
            raise ValueError(f"power map exponent must be >= 1, got {k}")
        cached = self._cache.get(k)
        if cached is not None:
            return cached
        # g^k only depends on k mod exponent
        r = k % self.exponent
        if r == 0:
            result = (0,) * self.n_classes
            self._cache[k] = result
            return result
        result = tuple(range(self.n_classes))
        for p in _factor(r):
            if p not in self.power_maps:
                raise KeyError(f"no power map supplied for prime {p}")
            pm = self.power_maps[p]
            result = tuple(pm[c] for c in result)
        self._cache[k] = result
        return result

    def validate(self) -> CharacterTable:
        """Check every invariant; raise TableValidationError on the first failure."""
        order, classes = self.order, self.classes
        if order < 1:
            raise TableValidationError("order", f"group order must be positive, got {order}")
        if not classes or classes[0].size != 1 or classes[0].element_order != 1:
            raise TableValidationError("identity class", "class 0 must have size 1 and element order 1")
        for c, cl in enumerate(classes):
            if cl.size < 1 or order % cl.size:
                raise TableValidationError("class size", f"class {c} size {cl.size} does not divide {order}")
            if cl.element_order < 1 or order % cl.element_order:
                raise TableValidationError(
                    "element order", f"class {c} element order {cl.element_order} does not divide {order}"
                )
        total = sum(cl.size for cl in classes)
        if total != order:
            raise TableValidationError("class sizes sum", f"sizes sum to {total}, order is {order}")
        lcm = reduce(lambda a, b: a * b // gcd(a, b), (cl.element_order for cl in classes), 1)
        if lcm != self.exponent:
            raise TableValidationError("exponent", f"lcm of element orders is {lcm}, table says {self.exponent}")

        needed = set(_primes_upto(self.k_max)) | {p for p in set(_factor(order))}
        for p in sorted(needed):
            if p not in self.power_maps:
                raise TableValidationError("power maps", f"missing power map for prime {p}")
        for p, pm in sorted(self.power_maps.items()):
            if len(pm) != len(classes) or any(not 0 <= c < len(classes) for c in pm):
                raise TableValidationError("power maps", f"power map for {p} is malformed")
            if pm[0] != 0:
                raise TableValidationError("power maps", f"power map for {p} moves the identity class")
            for c, img in enumerate(pm):
                o = classes[c].element_order
                if classes[img].element_order != o // gcd(o, p):
                    raise TableValidationError(
                        "power map orders", f"class {c} (order {o}) to the power {p} lands in class {img}"
                    )

        if len(self.names) != len(self.irreducibles) or len(set(self.names)) != len(self.names):
            raise TableValidationError("names", "irreducible names must be unique, one per row")
        if len(self.irreducibles) != len(classes):
            raise TableValidationError(
                "square table", f"{len(self.irreducibles)} irreducibles for {len(classes)} classes"
            )
        for i, row in enumerate(self.irreducibles):
            if len(row) != len(classes):
                raise TableValidationError("row length", f"{self.names[i]} has {len(row)} values")
            deg = row[0].as_rational()
            if deg is None or deg.denominator != 1 or deg < 1:
                raise TableValidationError("degree", f"{self.names[i]} has degree {row[0]}")
        deg_sq = sum(self.degree(i) ** 2 for i in range(len(self.irreducibles)))
        if deg_sq != order:
            raise TableValidationError("sum of squared degrees", f"got {deg_sq}, order is {order}")

        gram = inner_products(self, self.irreducibles, self.irreducibles)
        for i, row in enumerate(gram):
            for j, v in enumerate(row):
                if v != (1 if i == j else 0):
                    raise TableValidationError(
                        "row orthogonality", f"row orthogonality failed for ({i},{j}): <chi_i, chi_j> = {v}"
                    )
        if self.designated is not None and self.designated not in self.names:
            raise TableValidationError("designated", f"no irreducible named {self.designated!r}")
        return self


def power_class(t: CharacterTable, c: int, k: int) -> int:
    """Class of g^k for g in class ``c``."""
    return t.power_map(k)[c]


class ClassFunction:
    """Cyclotomic-valued function on the classes of one table."""

    __slots__ = ("table", "values")

    def __init__(self, table: CharacterTable, values: Iterable) -> None:
        values = tuple(Cyclotomic._coerce(v) for v in values)
        if len(values) != table.n_classes:
            raise ValueError(f"class function needs {table.n_classes} values, got {len(values)}")
        self.table = table
        self.values = values

    def _check(self, other: ClassFunction) -> None:
        if other.table is not self.table:
            raise ValueError("class functions belong to different character tables")

    def __add__(self, other: ClassFunction) -> ClassFunction:
        self._check(other)
        return ClassFunction(self.table, (a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        self._check(other)
        return ClassFunction(self.table, (a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> ClassFunction:
        return ClassFunction(self.table, (-a for a in self.values))

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.table, (a * b for a, b in zip(self.values, other.values)))
        return ClassFunction(self.table, (a * other for a in self.values))

    __rmul__ = __mul__

    def __truediv__(self, k) -> ClassFunction:
        return ClassFunction(self.table, (a / k for a in self.values))

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.table is other.table and self.values == other.values

    __hash__ = None

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, c: int) -> Cyclotomic:
        return self.values[c]

    @property
    def degree(self) -> Fraction:
        d = self.values[0].as_rational()
        if d is None:
            raise ValueError("value at the identity is not rational")
        return d

    def __repr__(self):
        return f"ClassFunction([{', '.join(str(v) for v in self.values)}])"


def _common_modulus(rows: Sequence[Sequence[Cyclotomic]]) -> int:
    n = 1
    for row in rows:
        for v in row:
            n = n * v.n // gcd(n, v.n)
    return n


def _int_coeff_array(rows: Sequence[Sequence[Cyclotomic]], n: int) -> tuple[np.ndarray, int]:
    """Rows -> (integer array [row, class, basis index], common denominator)."""
    lifted = [[v.lift(n).coeffs for v in row] for row in rows]
    den = 1
    for row in lifted:
        for coeffs in row:
            for c in coeffs:
                den = den * c.denominator // gcd(den, c.denominator)
    arr = np.empty((len(rows), len(rows[0]) if rows else 0, euler_phi(n)), dtype=object)
    for i, row in enumerate(lifted):
        for c, coeffs in enumerate(row):
            for k, x in enumerate(coeffs):
                arr[i, c, k] = int(x * den)
    return arr, den


def _conj_array(t: CharacterTable, gs: Sequence[Sequence[Cyclotomic]], n: int) -> tuple[np.ndarray, int]:
    if gs is t.irreducibles:
        key = ("conj_irr", n)
        if key not in t._cache:
            t._cache[key] = _int_coeff_array([[v.conj() for v in g] for g in gs], n)
        return t._cache[key]
    return _int_coeff_array([[v.conj() for v in g] for g in gs], n)


def inner_products(
    t: CharacterTable,
    fs: Sequence[Sequence[Cyclotomic]],
    gs: Sequence[Sequence[Cyclotomic]],
) -> list[list[Cyclotomic]]:
    """Matrix of (1/|G|) * sum_c size(c) f(c) conj(g(c)), computed exactly.

    Values are scaled to integer coefficient arrays so the class sums become
    integer matrix products; int64 is used only when the worst-case magnitude
    provably fits, otherwise Python integers.
    """
    if not fs or not gs:
        return [[] for _ in fs]
    n = _common_modulus(list(fs) + list(gs))
    phi = euler_phi(n)
    a, den_a = _int_coeff_array(fs, n)
    b, den_b = _conj_array(t, gs, n)
    sizes = np.array(t.sizes, dtype=object)
    bound = max(1, int(np.abs(a).max())) * max(1, int(np.abs(b).max())) * t.order * phi
    dtype = np.int64 if bound < 2**62 else object
    a = (a * sizes[None, :, None]).astype(dtype)
    b = b.astype(dtype)
    full = {}
    for k in range(phi):
        for l in range(phi):
            term = a[:, :, k] @ b[:, :, l].T
            full[k + l] = full[k + l] + term if k + l in full else term
    scale = Fraction(1, den_a * den_b * t.order)
    table = _power_table(n)
    out = []
    for i in range(len(fs)):
        row = []
        for j in range(len(gs)):
            coeffs = [0] * phi
            for e, mat in full.items():
                x = int(mat[i, j])
                if x:
                    for idx, r in enumerate(table[e % n]):
                        if r:
                            coeffs[idx] += x * r
            row.append(Cyclotomic(n, (c * scale for c in coeffs)))
        out.append(row)
    return out


def _require_int(obj, name: str, minimum: int = 1) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool) or obj < minimum:
        raise TableParseError(f"expected an integer >= {minimum}, got {obj!r}", field=name)
    return obj


def parse_table(text: str, k_max: int = DEFAULT_K_MAX) -> CharacterTable:
    """Parse and fully validate a table from JSON text."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise TableParseError(e.msg, line=e.lineno) from None
    if not isinstance(raw, dict):
        raise TableParseError("top level must be an object")
    for key in ("order", "exponent", "classes", "powerMaps", "irreducibles"):
        if key not in raw:
            raise TableParseError("missing key", field=key)

    order = _require_int(raw["order"], "order")
    exponent = _require_int(raw["exponent"], "exponent")
    if not isinstance(raw["classes"], list):
        raise TableParseError("expected a list", field="classes")
    classes = []
    for c, cl in enumerate(raw["classes"]):
        if not isinstance(cl, dict):
            raise TableParseError("expected an object", field=f"classes[{c}]")
        classes.append(
            ConjClass(
                _require_int(cl.get("size"), f"classes[{c}].size"),
                _require_int(cl.get("elementOrder"), f"classes[{c}].elementOrder"),
            )
        )

    if not isinstance(raw["powerMaps"], dict):
        raise TableParseError("expected an object", field="powerMaps")
    power_maps = {}
    for key, pm in raw["powerMaps"].items():
        try:
            p = int(key)
        except ValueError:
            raise TableParseError("power map key must be a prime", field=f"powerMaps.{key}") from None
        if p < 2 or _factor(p) != [p]:
            raise TableParseError("power map key must be a prime", field=f"powerMaps.{key}")
        if not isinstance(pm, list):
            raise TableParseError("expected a list", field=f"powerMaps.{key}")
        power_maps[p] = tuple(_require_int(x, f"powerMaps.{key}[{i}]", 0) for i, x in enumerate(pm))

    names, rows = [], []
    if not isinstance(raw["irreducibles"], list):
        raise TableParseError("expected a list", field="irreducibles")
    for i, chi in enumerate(raw["irreducibles"]):
        if not isinstance(chi, dict) or not isinstance(chi.get("name"), str):
            raise TableParseError("irreducible needs a string name", field=f"irreducibles[{i}].name")
        values = chi.get("values")
        if not isinstance(values, list):
            raise TableParseError("expected a list", field=f"irreducibles[{i}].values")
        row = []
        for c, v in enumerate(values):
            try:
                row.append(Cyclotomic.from_json(v))
            except (KeyError, TypeError, ValueError) as e:
                raise TableParseError(f"bad cyclotomic: {e}", field=f"irreducibles[{i}].values[{c}]") from None
        names.append(chi["name"])
        rows.append(tuple(row))

    designated = raw.get("designated")
    if designated is not None and not isinstance(designated, str):
        raise TableParseError("expected a string", field="designated")

    table = CharacterTable(
        order=order,
        classes=tuple(classes),
        power_maps=power_maps,
        irreducibles=tuple(rows),
        names=tuple(names),
        exponent=exponent,
        designated=designated,
        k_max=k_max,
    )
    return table.validate()


def load_table(path: str | Path, k_max: int = DEFAULT_K_MAX) -> CharacterTable:
    return parse_table(Path(path).read_text(encoding="utf-8"), k_max=k_max)


def column_orthogonality(t: CharacterTable) -> bool:
    """sum_i chi_i(c) conj(chi_i(c')) == delta(c, c') * |G| / size(c)."""
    cols = list(zip(*t.irreducibles))
    for c in range(t.n_classes):
        for c2 in range(c, t.n_classes):
            s = sum((x * y.conj() for x, y in zip(cols[c], cols[c2])), Cyclotomic.rational(0))
            expected = Fraction(t.order, t.classes[c].size) if c == c2 else 0
            if s != expected:
                return False
    return True
