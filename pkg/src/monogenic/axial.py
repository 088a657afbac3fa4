"""Calculus in the two axial variables (x0, r).

A ``RadialPolynomial`` carries a declared parity in r; the operators below
keep track of it so that division by r is always exact.  ``lift`` turns an
axial pair ``(u, v)`` into the Clifford polynomial ``(u + omega v) P`` with
``omega = x_vec / r``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping

from .clifford import DimensionError, Scalar, as_scalar, format_scalar
from .polynomial import CliffordPolynomial, multiply

EVEN = "even"
ODD = "odd"


class ParityError(ValueError):
    """A radial polynomial has the wrong parity in r for the operation."""


def _parity_of(b: int) -> str:
    return ODD if b % 2 else EVEN


def _flip(parity: str) -> str:
    return EVEN if parity == ODD else ODD


class RadialPolynomial:
    """Polynomial in (x0, r) whose r-exponents all share one parity."""

    __slots__ = ("parity", "terms")

    def __init__(self, parity: str, terms: Mapping[tuple[int, int], object] | None = None):
        if parity not in (EVEN, ODD):
            raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
        acc: dict[tuple[int, int], Scalar] = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in {(a, b)}")
            if _parity_of(b) != parity:
                raise ParityError(f"r-exponent {b} is not {parity}")
            acc[(a, b)] = acc.get((a, b), 0) + as_scalar(c)
        self.parity = parity
        self.terms = {k: c for k, c in acc.items() if c != 0}

    @classmethod
    def _raw(cls, parity: str, acc: dict) -> "RadialPolynomial":
        obj = cls.__new__(cls)
        obj.parity = parity
        obj.terms = {k: c for k, c in acc.items() if c != 0}
        return obj

    @classmethod
    def zero(cls, parity: str = EVEN) -> "RadialPolynomial":
        return cls._raw(parity, {})

    @classmethod
    def monomial(cls, a: int, b: int, coeff=1) -> "RadialPolynomial":
        return cls(_parity_of(b), {(a, b): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        return max((a + b for a, b in self.terms), default=-1)

    def as_parity(self, parity: str) -> "RadialPolynomial":
        """Re-declare parity; only possible for zero or already-matching values."""
        if parity == self.parity:
            return self
        if self.terms:
            raise ParityError(f"nonzero {self.parity} polynomial cannot be {parity}")
        return RadialPolynomial._raw(parity, {})

    def _merge_parity(self, other: "RadialPolynomial") -> str:
        if self.parity == other.parity:
            return self.parity
        if not other.terms:
            return self.parity
        if not self.terms:
            return other.parity
        raise ParityError("cannot add polynomials of different r-parity")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadialPolynomial._raw(EVEN, {(0, 0): other})
        if not isinstance(other, RadialPolynomial):
            return NotImplemented
        parity = self._merge_parity(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return RadialPolynomial._raw(parity, acc)

    __radd__ = __add__

    def __neg__(self) -> "RadialPolynomial":
        return self.scale(-1)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadialPolynomial._raw(EVEN, {(0, 0): other})
        if not isinstance(other, RadialPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, RadialPolynomial):
            return NotImplemented
        parity = EVEN if self.parity == other.parity else ODD
        acc: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return RadialPolynomial._raw(parity, acc)

    __rmul__ = __mul__

    def scale(self, q) -> "RadialPolynomial":
        q = as_scalar(q)
        return RadialPolynomial._raw(self.parity, {k: q * c for k, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        # parity is implied by the terms except for zero, where it is irrelevant
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(0, 0): other} if other else {})
        if not isinstance(other, RadialPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return f"RadialPolynomial({self.parity}, 0)"
        parts = [f"{c}*x0^{a}*r^{b}" for (a, b), c in sorted(self.terms.items())]
        return f"RadialPolynomial({self.parity}, {' + '.join(parts)})"

    # calculus

    def d_x0(self) -> "RadialPolynomial":
        return RadialPolynomial._raw(
            self.parity, {(a - 1, b): a * c for (a, b), c in self.terms.items() if a}
        )

    def d_r(self) -> "RadialPolynomial":
        return RadialPolynomial._raw(
            _flip(self.parity), {(a, b - 1): b * c for (a, b), c in self.terms.items() if b}
        )

    def div_r(self) -> "RadialPolynomial":
        if any(b == 0 for _, b in self.terms):
            raise ParityError("division by r is not exact: a term has no factor r")
        return RadialPolynomial._raw(
            _flip(self.parity), {(a, b - 1): c for (a, b), c in self.terms.items()}
        )

    def mul_r(self) -> "RadialPolynomial":
        return RadialPolynomial._raw(
            _flip(self.parity), {(a, b + 1): c for (a, b), c in self.terms.items()}
        )

    def to_json(self) -> dict:
        return {
            "parity": self.parity,
            "terms": [
                {"x0": a, "r": b, "coeff": format_scalar(self.terms[(a, b)])}
                for a, b in sorted(self.terms)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "RadialPolynomial":
        terms = {}
        for item in data["terms"]:
            key = (item["x0"], item["r"])
            if key in terms:
                raise ValueError(f"duplicate monomial {key}")
            terms[key] = Fraction(item["coeff"])
        return cls(data["parity"], terms)


def _require(g: RadialPolynomial, parity: str, what: str) -> None:
    if g.parity != parity and g.terms:
        raise ParityError(f"{what} needs an {parity} polynomial in r, got {g.parity}")


@dataclass(frozen=True)
class AxialPair:
    """The pair (u, v) standing for u + omega v; u even in r, v odd in r."""

    u: RadialPolynomial
    v: RadialPolynomial

    def __post_init__(self):
        _require(self.u, EVEN, "u")
        _require(self.v, ODD, "v")
        object.__setattr__(self, "u", self.u.as_parity(EVEN))
        object.__setattr__(self, "v", self.v.as_parity(ODD))

    @classmethod
    def zero(cls) -> "AxialPair":
        return cls(RadialPolynomial.zero(EVEN), RadialPolynomial.zero(ODD))

    def is_zero(self) -> bool:
        return self.u.is_zero() and self.v.is_zero()

    def __add__(self, other: "AxialPair") -> "AxialPair":
        return AxialPair(self.u + other.u, self.v + other.v)

    def __sub__(self, other: "AxialPair") -> "AxialPair":
        return AxialPair(self.u - other.u, self.v - other.v)

    def scale(self, q) -> "AxialPair":
        return AxialPair(self.u.scale(q), self.v.scale(q))

    def __mul__(self, other: "AxialPair") -> "AxialPair":
        """Complex product, treating omega as the imaginary unit."""
        if not isinstance(other, AxialPair):
            return NotImplemented
        return AxialPair(
            self.u * other.u - self.v * other.v,
            self.u * other.v + self.v * other.u,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, AxialPair):
            return NotImplemented
        return self.u == other.u and self.v == other.v

    def __hash__(self) -> int:
        return hash((self.u, self.v))

    def to_json(self) -> dict:
        return {"u": self.u.to_json(), "v": self.v.to_json()}


@dataclass(frozen=True)
class HolomorphicSeed:
    """f(z) = sum_n c_n z^n with exact real coefficients."""

    coefficients: tuple

    def __post_init__(self):
        coeffs = [as_scalar(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def monomial(cls, n: int, coeff=1) -> "HolomorphicSeed":
        return cls((0,) * n + (coeff,))

    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self.coefficients):
            if c == 0:
                continue
            parts.append(format_scalar(c) if n == 0 else f"{format_scalar(c)}*z^{n}")
        return " + ".join(reversed(parts)) or "0"


@lru_cache(maxsize=None)
def _z_power_pair(n: int) -> AxialPair:
    # (x0 + i r)^n split into real and imaginary parts
    u, v = {}, {}
    for b in range(n + 1):
        c = comb(n, b)
        # i^b = 1, i, -1, -i
        sign = (1, 1, -1, -1)[b % 4]
        (u if b % 2 == 0 else v)[(n - b, b)] = sign * c
    return AxialPair(RadialPolynomial(EVEN, u), RadialPolynomial(ODD, v))


def seed_to_pair(f: HolomorphicSeed) -> AxialPair:
    out = AxialPair.zero()
    for n, c in enumerate(f.coefficients):
        if c:
            out = out + _z_power_pair(n).scale(c)
    return out


def d_lower(n: int, g: RadialPolynomial) -> RadialPolynomial:
    """(r^-1 d/dr)^n applied to an even g."""
    if n < 0:
        raise ValueError("operator order must be nonnegative")
    _require(g, EVEN, "d_lower")
    g = g.as_parity(EVEN)
    for _ in range(n):
        g = g.d_r().div_r()
    return g


def d_upper(n: int, g: RadialPolynomial) -> RadialPolynomial:
    """g -> d/dr (g / r), iterated n times, on an odd g."""
    if n < 0:
        raise ValueError("operator order must be nonnegative")
    _require(g, ODD, "d_upper")
    g = g.as_parity(ODD)
    for _ in range(n):
        g = g.div_r().d_r()
    return g


def delta_z(g: RadialPolynomial) -> RadialPolynomial:
    return g.d_x0().d_x0() + g.d_r().d_r()


def delta_z_power(p: int, g: RadialPolynomial) -> RadialPolynomial:
    if p < 0:
        raise ValueError("Laplacian power must be nonnegative")
    for _ in range(p):
        g = delta_z(g)
    return g


def dbar_z(pair: AxialPair) -> AxialPair:
    half = Fraction(1, 2)
    u, v = pair.u, pair.v
    return AxialPair(
        (u.d_x0() - v.d_r()).scale(half),
        (v.d_x0() + u.d_r()).scale(half),
    )


def is_p_holomorphic(pair: AxialPair, p: int) -> bool:
    return dbar_z(AxialPair(delta_z_power(p, pair.u), delta_z_power(p, pair.v))).is_zero()


@lru_cache(maxsize=None)
def _norm_squared_power(m: int, a: int) -> CliffordPolynomial:
    return CliffordPolynomial.norm_squared(m) ** a


def radial_to_cartesian(g: RadialPolynomial, m: int) -> CliffordPolynomial:
    """Substitute r^2 -> x1^2 + ... + xm^2 in an even g."""
    _require(g, EVEN, "radial_to_cartesian")
    out = CliffordPolynomial.zero(m)
    by_r: dict[int, dict[int, Scalar]] = {}
    for (a, b), c in g.terms.items():
        by_r.setdefault(b // 2, {})[a] = c
    for half, row in by_r.items():
        base = _norm_squared_power(m, half)
        acc = {}
        for a, c in row.items():
            for e, mv in base.terms.items():
                exps = (e[0] + a,) + e[1:]
                acc[exps] = {bl: c * v for bl, v in mv.terms.items()}
        out = out + CliffordPolynomial._from_acc(m, acc)
    return out


def lift(pair: AxialPair, P: CliffordPolynomial | None = None, m: int | None = None) -> CliffordPolynomial:
    """(u + omega v) * P as a Cartesian Clifford polynomial, P on the right."""
    if m is None:
        if P is None:
            raise ValueError("dimension m is required when P is omitted")
        m = P.m
    if P is None:
        P = CliffordPolynomial.constant(m, 1)
    if P.m != m:
        raise DimensionError(f"P lives over R_0,{P.m}, lift requested for m={m}")
    front = radial_to_cartesian(pair.u, m)
    if pair.v.terms:
        front = front + multiply(CliffordPolynomial.vector_variable(m), radial_to_cartesian(pair.v.div_r(), m))
    return multiply(front, P)


def vekua_residuals(A: RadialPolynomial, B: RadialPolynomial, k: int, m: int):
    """Residuals of d0 A - dr B - (2k+m-1) B/r and d0 B + dr A."""
    _require(A, EVEN, "A")
    _require(B, ODD, "B")
    A, B = A.as_parity(EVEN), B.as_parity(ODD)
    first = A.d_x0() - B.d_r() - B.div_r().scale(2 * k + m - 1)
    second = B.d_x0() + A.d_r()
    return first, second


def vekua_check(A: RadialPolynomial, B: RadialPolynomial, k: int, m: int) -> bool:
    first, second = vekua_residuals(A, B, k, m)
    return first.is_zero() and second.is_zero()
