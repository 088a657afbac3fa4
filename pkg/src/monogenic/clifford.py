"""Exact arithmetic in the real Clifford algebra R_{0,m}.

Basis blades are sorted index tuples, ``()`` being the identity.  Generators
square to ``-1`` and anticommute.  Coefficients are ints or ``Fraction``;
floats are refused.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _Rational
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]
Blade = tuple  # tuple[int, ...], strictly increasing, entries in 1..m


class DimensionError(ValueError):
    """Operands live in Clifford algebras of different dimension."""


def as_scalar(value) -> Scalar:
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, _Rational):
        return as_scalar(Fraction(value.numerator, value.denominator))
    if isinstance(value, str):
        return as_scalar(Fraction(value))
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def check_blade(indices: Iterable[int], m: int) -> Blade:
    blade = tuple(indices)
    for i, j in enumerate(blade):
        if not isinstance(j, int) or isinstance(j, bool):
            raise TypeError(f"blade index {j!r} is not an integer")
        if j < 1 or j > m:
            raise ValueError(f"blade index {j} outside 1..{m}")
        if i and blade[i - 1] >= j:
            raise ValueError(f"blade {blade} is not strictly increasing")
    return blade


@lru_cache(maxsize=None)
def blade_product(a: Blade, b: Blade) -> tuple[int, Blade]:
    """Return ``(sign, blade)`` with ``e_a e_b = sign * e_blade``."""
    swaps = 0
    for j in b:
        # moving e_j left past every larger index of a
        swaps += sum(1 for i in a if i > j)
    common = set(a) & set(b)
    sign = -1 if (swaps + len(common)) % 2 else 1
    return sign, tuple(sorted(set(a) ^ set(b)))


@lru_cache(maxsize=None)
def product_table(m: int) -> dict:
    """``table[a][b] == blade_product(a, b)`` for every pair of blades of R_0,m."""
    blades = [tuple(j for j in range(1, m + 1) if mask >> (j - 1) & 1) for mask in range(1 << m)]
    return {a: {b: blade_product(a, b) for b in blades} for a in blades}


def conjugation_sign(blade: Blade) -> int:
    g = len(blade)
    return -1 if (g * (g + 1) // 2) % 2 else 1


class Multivector:
    """An element ``sum_A a_A e_A`` of R_{0,m} with exact coefficients.

    Instances are immutable; zero coefficients are never stored.
    """

    __slots__ = ("m", "terms", "_hash")

    def __init__(self, m: int, terms: Mapping[Iterable[int], object] | None = None):
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"dimension must be a positive integer, got {m!r}")
        acc: dict[Blade, Scalar] = {}
        for blade, coeff in (terms or {}).items():
            blade = check_blade(blade, m)
            acc[blade] = acc.get(blade, 0) + as_scalar(coeff)
        self.m = m
        self.terms = {b: c for b, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, m: int, terms: dict) -> "Multivector":
        # trusted constructor: blades already valid, zeros may be present
        obj = cls.__new__(cls)
        obj.m = m
        obj.terms = {b: c for b, c in terms.items() if c != 0}
        obj._hash = None
        return obj

    @classmethod
    def scalar(cls, m: int, value=1) -> "Multivector":
        return cls._raw(m, {(): as_scalar(value)})

    @classmethod
    def basis(cls, m: int, *indices: int) -> "Multivector":
        """Basis blade ``e_{i1} e_{i2} ...``; indices need not be sorted."""
        out = cls.scalar(m)
        for j in indices:
            out = out * cls._raw(m, {check_blade((j,), m): 1})
        return out

    @classmethod
    def vector(cls, m: int, components: Iterable) -> "Multivector":
        return cls(m, {(j,): c for j, c in enumerate(components, start=1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def scalar_part(self) -> Scalar:
        return self.terms.get((), 0)

    def grades(self) -> set[int]:
        return {len(b) for b in self.terms}

    def _check(self, other: "Multivector") -> None:
        if self.m != other.m:
            raise DimensionError(f"cannot combine R_0,{self.m} with R_0,{other.m}")

    def __add__(self, other):
        if not isinstance(other, Multivector):
            if isinstance(other, (int, Fraction)):
                other = Multivector.scalar(self.m, other)
            else:
                return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for b, c in other.terms.items():
            out[b] = out.get(b, 0) + c
        return Multivector._raw(self.m, out)

    __radd__ = __add__

    def __neg__(self) -> "Multivector":
        return Multivector._raw(self.m, {b: -c for b, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Multivector.scalar(self.m, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): other} if other else {})
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.m, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        if not self.terms:
            return f"Multivector({self.m}, 0)"
        parts = []
        for b in sorted(self.terms, key=lambda b: (len(b), b)):
            name = "e" + "".join(map(str, b)) if b else "1"
            parts.append(f"{self.terms[b]}*{name}")
        return f"Multivector({self.m}, {' + '.join(parts)})"

    def conjugate(self) -> "Multivector":
        return conjugate(self)

    def to_json(self) -> dict:
        return {"m": self.m, "terms": terms_to_json(self)}

    @classmethod
    def from_json(cls, data: Mapping) -> "Multivector":
        return terms_from_json(data["m"], data["terms"])


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    a._check(b)
    out: dict[Blade, Scalar] = {}
    for ba, ca in a.terms.items():
        for bb, cb in b.terms.items():
            sign, blade = blade_product(ba, bb)
            out[blade] = out.get(blade, 0) + sign * ca * cb
    return Multivector._raw(a.m, out)


def conjugate(a: Multivector) -> Multivector:
    return Multivector._raw(a.m, {b: conjugation_sign(b) * c for b, c in a.terms.items()})


def add(a: Multivector, b: Multivector) -> Multivector:
    return a + b


def scale(q, a: Multivector) -> Multivector:
    q = as_scalar(q)
    if q == 0:
        return Multivector._raw(a.m, {})
    return Multivector._raw(a.m, {b: q * c for b, c in a.terms.items()})


def format_scalar(q: Scalar) -> str:
    return str(Fraction(q))


def terms_to_json(a: Multivector) -> list[dict]:
    return [{"blade": list(b), "coeff": format_scalar(a.terms[b])} for b in sorted(a.terms)]


def terms_from_json(m: int, terms: Iterable[Mapping]) -> Multivector:
    acc: dict[Blade, Scalar] = {}
    for item in terms:
        blade = check_blade(item["blade"], m)
        if blade in acc:
            raise ValueError(f"duplicate blade {list(blade)}")
        coeff = item["coeff"]
        if not isinstance(coeff, (str, int)) or isinstance(coeff, bool):
            raise ValueError(f"coefficient {coeff!r} must be a rational string")
        acc[blade] = as_scalar(Fraction(coeff))
    return Multivector(m, acc)
