"""Polynomials in x0, x1, ..., xm with Clifford coefficients.

Exponent tuples have length ``m + 1``; index 0 is the paravector's real
variable x0.  Products are non-commutative (coefficients multiply with the
geometric product, left factor first).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .clifford import (
    DimensionError,
    Multivector,
    Scalar,
    as_scalar,
    blade_product,
    product_table,
    terms_from_json,
    terms_to_json,
)

Exponents = tuple  # tuple[int, ...] of length m + 1


def _bucket(acc: dict, exps, blade, value) -> None:
    row = acc.get(exps)
    if row is None:
        acc[exps] = {blade: value}
    else:
        row[blade] = row.get(blade, 0) + value


class CliffordPolynomial:
    __slots__ = ("m", "terms", "_hash")

    def __init__(self, m: int, terms: Mapping[Iterable[int], Multivector] | None = None):
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"dimension must be a positive integer, got {m!r}")
        acc: dict = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != m + 1 or any(not isinstance(d, int) or d < 0 for d in exps):
                raise ValueError(f"bad exponent tuple {exps} for m={m}")
            if isinstance(coeff, (int, Fraction)):
                coeff = Multivector.scalar(m, coeff)
            if not isinstance(coeff, Multivector):
                raise TypeError(f"coefficient must be a Multivector, got {type(coeff).__name__}")
            if coeff.m != m:
                raise DimensionError(f"coefficient in R_0,{coeff.m} for polynomial over R_0,{m}")
            for blade, c in coeff.terms.items():
                _bucket(acc, exps, blade, c)
        self._set(m, acc)

    def _set(self, m: int, acc: dict) -> None:
        self.m = m
        self.terms = {}
        for exps, row in acc.items():
            mv = Multivector._raw(m, row)
            if mv.terms:
                self.terms[exps] = mv
        self._hash = None

    @classmethod
    def _from_acc(cls, m: int, acc: dict) -> "CliffordPolynomial":
        obj = cls.__new__(cls)
        obj._set(m, acc)
        return obj

    # constructors

    @classmethod
    def zero(cls, m: int) -> "CliffordPolynomial":
        return cls._from_acc(m, {})

    @classmethod
    def constant(cls, m: int, value=1) -> "CliffordPolynomial":
        if isinstance(value, Multivector):
            return cls(m, {(0,) * (m + 1): value})
        return cls._from_acc(m, {(0,) * (m + 1): {(): as_scalar(value)}})

    @classmethod
    def variable(cls, m: int, j: int) -> "CliffordPolynomial":
        """The scalar coordinate x_j, 0 <= j <= m."""
        if not 0 <= j <= m:
            raise ValueError(f"variable index {j} outside 0..{m}")
        exps = [0] * (m + 1)
        exps[j] = 1
        return cls._from_acc(m, {tuple(exps): {(): 1}})

    @classmethod
    def vector_variable(cls, m: int) -> "CliffordPolynomial":
        """x_vec = sum_j x_j e_j."""
        acc = {}
        for j in range(1, m + 1):
            exps = [0] * (m + 1)
            exps[j] = 1
            acc[tuple(exps)] = {(j,): 1}
        return cls._from_acc(m, acc)

    @classmethod
    def paravector(cls, m: int) -> "CliffordPolynomial":
        return cls.variable(m, 0) + cls.vector_variable(m)

    @classmethod
    def norm_squared(cls, m: int) -> "CliffordPolynomial":
        """x1^2 + ... + xm^2 (scalar)."""
        acc = {}
        for j in range(1, m + 1):
            exps = [0] * (m + 1)
            exps[j] = 2
            acc[tuple(exps)] = {(): 1}
        return cls._from_acc(m, acc)

    # structure

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def depends_on_x0(self) -> bool:
        return any(e[0] for e in self.terms)

    def at_x0_zero(self) -> "CliffordPolynomial":
        return CliffordPolynomial._from_acc(
            self.m, {e: dict(c.terms) for e, c in self.terms.items() if e[0] == 0}
        )

    def homogeneous_part(self, k: int) -> "CliffordPolynomial":
        return CliffordPolynomial._from_acc(
            self.m, {e: dict(c.terms) for e, c in self.terms.items() if sum(e) == k}
        )

    def _check(self, other: "CliffordPolynomial") -> None:
        if self.m != other.m:
            raise DimensionError(f"cannot combine polynomials over R_0,{self.m} and R_0,{other.m}")

    def _coerce(self, other):
        if isinstance(other, CliffordPolynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Multivector)):
            return CliffordPolynomial.constant(self.m, other)
        return None

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = {e: dict(c.terms) for e, c in self.terms.items()}
        for e, c in other.terms.items():
            for b, v in c.terms.items():
                _bucket(acc, e, b, v)
        return CliffordPolynomial._from_acc(self.m, acc)

    __radd__ = __add__

    def __neg__(self) -> "CliffordPolynomial":
        return self.scale(-1)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Multivector):
            return multiply(CliffordPolynomial.constant(self.m, other), self)
        return NotImplemented

    def __pow__(self, n: int) -> "CliffordPolynomial":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = CliffordPolynomial.constant(self.m, 1)
        for _ in range(n):
            out = multiply(out, self)
        return out

    def scale(self, q) -> "CliffordPolynomial":
        q = as_scalar(q)
        return CliffordPolynomial._from_acc(
            self.m, {e: {b: q * v for b, v in c.terms.items()} for e, c in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Multivector)):
            other = CliffordPolynomial.constant(self.m, other)
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.m, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        if not self.terms:
            return f"CliffordPolynomial(m={self.m}, 0)"
        parts = []
        for e in sorted(self.terms):
            mono = "*".join(f"x{j}^{d}" if d > 1 else f"x{j}" for j, d in enumerate(e) if d)
            parts.append(f"({self.terms[e]!r})" + (f"*{mono}" if mono else ""))
        return f"CliffordPolynomial(m={self.m}, {' + '.join(parts)})"

    # serialization

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "terms": [
                {"exponents": list(e), "coeff": terms_to_json(self.terms[e])}
                for e in sorted(self.terms)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CliffordPolynomial":
        m = data["m"]
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise ValueError(f"bad dimension {m!r}")
        terms = {}
        for item in data["terms"]:
            exps = tuple(item["exponents"])
            if exps in terms:
                raise ValueError(f"duplicate exponent tuple {list(exps)}")
            terms[exps] = terms_from_json(m, item["coeff"])
        return cls(m, terms)


def multiply(a: CliffordPolynomial, b: CliffordPolynomial) -> CliffordPolynomial:
    a._check(b)
    acc: dict = {}
    table = product_table(a.m)
    b_items = [(eb, list(cb.terms.items())) for eb, cb in b.terms.items()]
    for ea, ca in a.terms.items():
        a_items = [(table[ba], va) for ba, va in ca.terms.items()]
        for eb, bitems in b_items:
            exps = tuple(x + y for x, y in zip(ea, eb))
            row = acc.get(exps)
            if row is None:
                row = acc[exps] = {}
            get = row.get
            for tab, va in a_items:
                for bb, vb in bitems:
                    sign, blade = tab[bb]
                    row[blade] = get(blade, 0) + sign * va * vb
    return CliffordPolynomial._from_acc(a.m, acc)


def partial(j: int, p: CliffordPolynomial) -> CliffordPolynomial:
    if not 0 <= j <= p.m:
        raise ValueError(f"variable index {j} outside 0..{p.m}")
    acc: dict = {}
    for e, c in p.terms.items():
        d = e[j]
        if d:
            exps = e[:j] + (d - 1,) + e[j + 1:]
            acc[exps] = {b: d * v for b, v in c.terms.items()}
    return CliffordPolynomial._from_acc(p.m, acc)


def _dirac_acc(p: CliffordPolynomial, sign: int) -> dict:
    acc: dict = {}
    for e, c in p.terms.items():
        for j in range(1, p.m + 1):
            d = e[j]
            if not d:
                continue
            exps = e[:j] + (d - 1,) + e[j + 1:]
            for b, v in c.terms.items():
                s, blade = blade_product((j,), b)
                _bucket(acc, exps, blade, sign * s * d * v)
    return acc


def dirac(p: CliffordPolynomial) -> CliffordPolynomial:
    """sum_j e_j d/dx_j, the e_j acting from the left."""
    return CliffordPolynomial._from_acc(p.m, _dirac_acc(p, 1))


def _with_x0_derivative(p: CliffordPolynomial, sign: int) -> CliffordPolynomial:
    acc = _dirac_acc(p, sign)
    for e, c in p.terms.items():
        d = e[0]
        if d:
            exps = (d - 1,) + e[1:]
            for b, v in c.terms.items():
                _bucket(acc, exps, b, d * v)
    return CliffordPolynomial._from_acc(p.m, acc)


def cauchy_riemann(p: CliffordPolynomial) -> CliffordPolynomial:
    return _with_x0_derivative(p, 1)


def conjugate_cauchy_riemann(p: CliffordPolynomial) -> CliffordPolynomial:
    return _with_x0_derivative(p, -1)


def laplacian(p: CliffordPolynomial, variables: Iterable[int] | None = None) -> CliffordPolynomial:
    """Sum of second partials over ``variables`` (default: x0, ..., xm)."""
    js = range(p.m + 1) if variables is None else tuple(variables)
    acc: dict = {}
    for e, c in p.terms.items():
        items = c.terms.items()
        for j in js:
            d = e[j]
            if d < 2:
                continue
            exps = e[:j] + (d - 2,) + e[j + 1:]
            f = d * (d - 1)
            row = acc.get(exps)
            if row is None:
                acc[exps] = {b: f * v for b, v in items}
            else:
                get = row.get
                for b, v in items:
                    row[b] = get(b, 0) + f * v
    return CliffordPolynomial._from_acc(p.m, acc)


def laplacian_power(n: int, p: CliffordPolynomial) -> CliffordPolynomial:
    if n < 0:
        raise ValueError("Laplacian power must be nonnegative")
    for _ in range(n):
        if not p.terms:
            break
        p = laplacian(p)
    return p


def euler(p: CliffordPolynomial) -> CliffordPolynomial:
    """sum_j x_j d/dx_j over all m + 1 variables."""
    return CliffordPolynomial._from_acc(
        p.m,
        {e: {b: sum(e) * v for b, v in c.terms.items()} for e, c in p.terms.items()},
    )


def is_monogenic(p: CliffordPolynomial) -> bool:
    return cauchy_riemann(p).is_zero()


def is_polyharmonic(p: CliffordPolynomial, degree: int) -> bool:
    if degree < 1:
        raise ValueError("polyharmonic degree must be positive")
    return laplacian_power(degree, p).is_zero()


def is_homogeneous(p: CliffordPolynomial, k: int) -> bool:
    # the zero polynomial counts as homogeneous of every degree
    return all(sum(e) == k for e in p.terms)


def substitute_scalar(coeffs: Mapping[tuple, Scalar], m: int) -> CliffordPolynomial:
    """Build a scalar-valued polynomial from ``{exponents: rational}``."""
    return CliffordPolynomial._from_acc(m, {tuple(e): {(): as_scalar(c)} for e, c in coeffs.items()})
