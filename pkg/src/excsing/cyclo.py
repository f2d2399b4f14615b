"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is stored as its residue modulo the n-th cyclotomic polynomial,
in the power basis 1, z, ..., z^(phi(n)-1), with Fraction coefficients.
That representation is unique, so equality inside one field is a tuple
comparison.  Elements of different fields are compared after lifting both
to Q(zeta_lcm).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Mapping

__all__ = [
    "Cyclotomic",
    "cyclotomic_poly",
    "euler_phi",
    "zeta",
]


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def _exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic; division must leave no remainder
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + dd]
        quot[i] = c
        if c:
            for j, e in enumerate(den):
                num[i + j] -= c * e
    if any(num[:dd]):
        raise ArithmeticError("polynomial division left a remainder")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, constant term first."""
    if n < 1:
        raise ValueError(f"cyclotomic modulus must be >= 1, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _exact_div(poly, cyclotomic_poly(d))
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical coefficient vectors of zeta_n^k for k = 0..n-1."""
    phi_poly = cyclotomic_poly(n)
    deg = len(phi_poly) - 1
    row = [1] + [0] * (deg - 1)
    rows = []
    for _ in range(n):
        rows.append(tuple(row))
        top = row[-1]
        row = [0] + row[:-1]
        if top:
            for i in range(deg):
                row[i] -= top * phi_poly[i]
    return tuple(rows)


def _reduce(n: int, full: Mapping[int, Fraction] | Iterable[tuple[int, Fraction]]) -> tuple[Fraction, ...]:
    """Reduce sum(c * zeta_n^k) to canonical coefficients."""
    table = _power_table(n)
    out = [Fraction(0)] * len(table[0])
    items = full.items() if isinstance(full, Mapping) else full
    for k, c in items:
        if not c:
            continue
        for i, e in enumerate(table[k % n]):
            if e:
                out[i] += c * e
    return tuple(out)


class Cyclotomic:
    """An immutable element of Q(zeta_n) in canonical form."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Iterable) -> None:
        coeffs = tuple(Fraction(c) for c in coeffs)
        if n < 1:
            raise ValueError(f"cyclotomic modulus must be >= 1, got {n}")
        if len(coeffs) != euler_phi(n):
            raise ValueError(
                f"Q(zeta_{n}) needs {euler_phi(n)} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    # construction

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[tuple[int, object]]) -> Cyclotomic:
        """Build sum(c * zeta_n^k) from (k, c) pairs; exponents may be any integer."""
        return cls(n, _reduce(n, [(k, Fraction(c)) for k, c in terms]))

    @classmethod
    def rational(cls, r) -> Cyclotomic:
        return cls(1, (Fraction(r),))

    @classmethod
    def from_json(cls, obj: Mapping) -> Cyclotomic:
        n = obj["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"bad cyclotomic modulus {n!r}")
        terms = []
        for term in obj["terms"]:
            k, num, den = term
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in (k, num, den)):
                raise ValueError(f"cyclotomic term must be three integers, got {term!r}")
            if den == 0:
                raise ValueError("zero denominator in cyclotomic term")
            terms.append((k, Fraction(num, den)))
        return cls.from_terms(n, terms)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [[k, c.numerator, c.denominator] for k, c in enumerate(self.coeffs) if c],
        }

    # field embedding

    def lift(self, m: int) -> Cyclotomic:
        """Embed into Q(zeta_m); requires n | m."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"cannot lift Q(zeta_{self.n}) into Q(zeta_{m})")
        step = m // self.n
        return Cyclotomic(m, _reduce(m, [(i * step, c) for i, c in enumerate(self.coeffs)]))

    @staticmethod
    def _coerce(x) -> Cyclotomic:
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Rational)):
            return Cyclotomic.rational(x)
        raise TypeError(f"cannot interpret {type(x).__name__} as a cyclotomic number")

    @staticmethod
    def _common(a: Cyclotomic, b: Cyclotomic) -> tuple[Cyclotomic, Cyclotomic]:
        if a.n == b.n:
            return a, b
        m = _lcm(a.n, b.n)
        return a.lift(m), b.lift(m)

    # arithmetic

    def __add__(self, other):
        try:
            a, b = self._common(self, self._coerce(other))
        except TypeError:
            return NotImplemented
        return Cyclotomic(a.n, (x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, (-x for x in self.coeffs))

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return Cyclotomic(self.n, (x * other for x in self.coeffs))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._common(self, other)
        if a.n == 1:
            return Cyclotomic(1, (a.coeffs[0] * b.coeffs[0],))
        prod: dict[int, Fraction] = {}
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    prod[i + j] = prod.get(i + j, 0) + x * y
        return Cyclotomic(a.n, _reduce(a.n, prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("cyclotomic division by zero")
            return Cyclotomic(self.n, (x / other for x in self.coeffs))
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result, base = Cyclotomic.rational(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> Cyclotomic:
        """Complex conjugate: the automorphism zeta -> zeta^-1."""
        return Cyclotomic(self.n, _reduce(self.n, [(-i, c) for i, c in enumerate(self.coeffs)]))

    # inspection

    def as_rational(self) -> Fraction | None:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integral(self) -> bool:
        # Z[zeta_n] is the ring of integers and the power basis is an integral basis
        return all(c.denominator == 1 for c in self.coeffs)

    def normalized_trace(self) -> Fraction:
        """Tr(x)/phi(n); independent of the field x is viewed in."""
        total = Fraction(0)
        for i, c in enumerate(self.coeffs):
            if c:
                m = self.n // gcd(self.n, i)
                total += c * Fraction(_mobius(m), euler_phi(m))
        return total

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._common(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        r = self.as_rational()
        if r is not None:
            return hash(r)
        return hash(("cyclotomic", self.normalized_trace()))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Cyclotomic({self.n}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
                parts.append(f"{coef}z{self.n}^{k}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def zeta(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k in canonical form."""
    if n < 1:
        raise ValueError(f"cyclotomic modulus must be >= 1, got {n}")
    return Cyclotomic(n, _power_table(n)[k % n])
