"""Homogeneous polynomials in x1..xm: CK extension and Fischer decomposition.

The spaces of homogeneous monogenics are obtained as null spaces of the
Dirac operator on a monomial basis; the Fischer decomposition of a scalar
monomial is found by solving one exact linear system per degree and is then
extended right-linearly to Clifford-valued input.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import factorial, lcm

from .axial import EVEN, ODD, AxialPair, RadialPolynomial
from .clifford import Multivector
from .linalg import RowReducer
from .polynomial import (
    CliffordPolynomial,
    dirac,
    is_homogeneous,
    multiply,
)


class NotHomogeneousError(ValueError):
    pass


@dataclass(frozen=True)
class SphericalMonogenic:
    """A homogeneous monogenic polynomial of degree k in x1..xm."""

    poly: CliffordPolynomial
    k: int

    def __post_init__(self):
        if self.poly.depends_on_x0():
            raise ValueError("spherical monogenics do not depend on x0")
        if not is_homogeneous(self.poly, self.k):
            raise NotHomogeneousError(f"polynomial is not homogeneous of degree {self.k}")
        if not dirac(self.poly).is_zero():
            raise ValueError("polynomial is not annihilated by the Dirac operator")

    @property
    def m(self) -> int:
        return self.poly.m


@dataclass(frozen=True)
class FischerDecomposition:
    """``components[n]`` is the monogenic factor multiplying x_vec^n."""

    k: int
    components: tuple

    def reassemble(self) -> CliffordPolynomial:
        m = self.components[0].m
        out = CliffordPolynomial.zero(m)
        for n, comp in enumerate(self.components):
            if not comp.poly.is_zero():
                out = out + multiply(vector_power(m, n), comp.poly)
        return out

    def to_json(self) -> dict:
        return {"k": self.k, "components": [c.poly.to_json() for c in self.components]}

    @classmethod
    def from_json(cls, data) -> "FischerDecomposition":
        k = data["k"]
        comps = data["components"]
        if len(comps) != k + 1:
            raise ValueError(f"expected {k + 1} components, got {len(comps)}")
        return cls(
            k,
            tuple(SphericalMonogenic(CliffordPolynomial.from_json(c), k - n) for n, c in enumerate(comps)),
        )


def clear_denominators(p: CliffordPolynomial) -> CliffordPolynomial:
    """Smallest positive integer multiple of p with integer coefficients."""
    den = 1
    for mv in p.terms.values():
        for c in mv.terms.values():
            den = lcm(den, Fraction(c).denominator)
    return CliffordPolynomial._from_acc(
        p.m,
        {e: {b: int(c * den) for b, c in mv.terms.items()} for e, mv in p.terms.items()},
    )


@lru_cache(maxsize=None)
def vector_power(m: int, n: int) -> CliffordPolynomial:
    if n == 0:
        return CliffordPolynomial.constant(m, 1)
    return multiply(vector_power(m, n - 1), CliffordPolynomial.vector_variable(m))


@lru_cache(maxsize=None)
def spatial_monomials(k: int, m: int) -> tuple:
    """Exponent tuples (x0 exponent 0) of degree k, sorted."""
    out = []
    for combo in combinations_with_replacement(range(1, m + 1), k):
        e = [0] * (m + 1)
        for j in combo:
            e[j] += 1
        out.append(tuple(e))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def all_blades(m: int) -> tuple:
    return tuple(b for g in range(m + 1) for b in combinations(range(1, m + 1), g))


@lru_cache(maxsize=None)
def monogenic_basis(k: int, m: int) -> tuple:
    """A basis of the homogeneous degree-k monogenics, each of one blade parity."""
    monos = spatial_monomials(k, m)
    blades = all_blades(m)
    unknowns = [(e, b) for e in monos for b in blades]
    rows: dict = {}
    for i, (e, b) in enumerate(unknowns):
        unit = CliffordPolynomial(m, {e: Multivector(m, {b: 1})})
        for exps, mv in dirac(unit).terms.items():
            for blade, v in mv.terms.items():
                rows.setdefault((exps, blade), {})[i] = v
    red = RowReducer(len(unknowns))
    for key in sorted(rows):
        red.add_row(rows[key])
    basis = []
    for vec in red.nullspace():
        acc: dict = {}
        for i, v in vec.items():
            e, b = unknowns[i]
            acc.setdefault(e, {})[b] = v
        basis.append(clear_denominators(CliffordPolynomial._from_acc(m, acc)))
    return tuple(basis)


def _blade_parity(p: CliffordPolynomial) -> int:
    parities = {len(b) % 2 for mv in p.terms.values() for b in mv.terms}
    assert len(parities) == 1, "basis element mixes blade parities"
    return parities.pop()


@lru_cache(maxsize=None)
def _scalar_fischer_table(k: int, m: int) -> dict:
    """Fischer components of every scalar monomial of degree k.

    Returns ``{monomial: [poly_for_slot_0, ..., poly_for_slot_k]}``.
    """
    columns = []  # (slot n, basis poly, column as {equation: value})
    for n in range(k + 1):
        for b in monogenic_basis(k - n, m):
            # scalar input is even, so x_vec^n * b must be even
            if _blade_parity(b) != n % 2:
                continue
            col = {}
            for exps, mv in multiply(vector_power(m, n), b).terms.items():
                for blade, v in mv.terms.items():
                    col[(exps, blade)] = v
            columns.append((n, b, col))
    monos = spatial_monomials(k, m)
    ncols = len(columns)
    rows: dict = {}
    for i, (_, _, col) in enumerate(columns):
        for key, v in col.items():
            rows.setdefault(key, {})[i] = v
    for j, e in enumerate(monos):
        rows.setdefault((e, ()), {})[ncols + j] = 1
    red = RowReducer(ncols)
    for key in sorted(rows):
        red.add_row(rows[key])
    table = {}
    for j, e in enumerate(monos):
        sol = red.solution(ncols + j)
        slots = [CliffordPolynomial.zero(m) for _ in range(k + 1)]
        for i, coeff in sol.items():
            n, b, _ = columns[i]
            slots[n] = slots[n] + b.scale(coeff)
        table[e] = slots
    return table


def fischer_decompose(P: CliffordPolynomial, k: int) -> FischerDecomposition:
    if P.depends_on_x0():
        raise ValueError("Fischer decomposition takes a polynomial in x1..xm only")
    if not is_homogeneous(P, k):
        raise NotHomogeneousError(f"input is not homogeneous of degree {k}")
    m = P.m
    table = _scalar_fischer_table(k, m)
    slots = [CliffordPolynomial.zero(m) for _ in range(k + 1)]
    for e, mv in P.terms.items():
        for n, comp in enumerate(table[e]):
            if not comp.is_zero():
                # right multiplication by a constant keeps monogenicity
                slots[n] = slots[n] + multiply(comp, CliffordPolynomial.constant(m, mv))
    return FischerDecomposition(k, tuple(SphericalMonogenic(s, k - n) for n, s in enumerate(slots)))


def ck_extend(g: CliffordPolynomial) -> CliffordPolynomial:
    """Monogenic extension sum_j (-x0)^j / j! * dirac^j g."""
    if g.depends_on_x0():
        raise ValueError("CK extension takes a polynomial in x1..xm only")
    m = g.m
    x0 = CliffordPolynomial.variable(m, 0)
    out = CliffordPolynomial.zero(m)
    term, j = g, 0
    while not term.is_zero():
        out = out + multiply(x0 ** j, term).scale(Fraction((-1) ** j, factorial(j)))
        term = dirac(term)
        j += 1
    return out


def dirac_factor(n: int, l: int, m: int) -> int:
    """The constant c with dirac(x_vec^n M) = c x_vec^(n-1) M for M of degree l."""
    if n == 0:
        return 0
    k = n + l
    return -(2 * k + m - n - 1) if n % 2 else -n


def dirac_power_on_xn_p(n: int, M: SphericalMonogenic) -> CliffordPolynomial:
    if n == 0:
        return CliffordPolynomial.zero(M.m)
    c = dirac_factor(n, M.k, M.m)
    return multiply(vector_power(M.m, n - 1), M.poly).scale(c)


def ck_axial_coefficients(n: int, l: int, m: int) -> list[Fraction]:
    """c_j with CK[x_vec^n M] = (sum_j c_j x0^j x_vec^(n-j)) M."""
    coeffs = []
    mu = Fraction(1)
    for j in range(n + 1):
        coeffs.append((-1) ** j * mu / factorial(j))
        mu *= dirac_factor(n - j, l, m)
    return coeffs


def ck_axial_form(n: int, l: int, m: int) -> AxialPair:
    u: dict = {}
    v: dict = {}
    for j, c in enumerate(ck_axial_coefficients(n, l, m)):
        if not c:
            continue
        s = n - j
        # x_vec^(2a) = (-1)^a r^(2a);  x_vec^(2a+1) = (-1)^a r^(2a+1) omega
        sign = -1 if (s // 2) % 2 else 1
        (v if s % 2 else u)[(j, s)] = sign * c
    return AxialPair(RadialPolynomial(EVEN, u), RadialPolynomial(ODD, v))


def random_homogeneous(k: int, m: int, seed: int, bound: int = 3) -> CliffordPolynomial:
    """Random degree-k polynomial in x1..xm with integer coefficients in [-bound, bound]."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    rng = random.Random(seed)
    acc = {}
    for e in spatial_monomials(k, m):
        acc[e] = {b: rng.randint(-bound, bound) for b in all_blades(m)}
    p = CliffordPolynomial._from_acc(m, acc)
    if p.is_zero():
        p = CliffordPolynomial(m, {spatial_monomials(k, m)[0]: Multivector.scalar(m, 1)})
    return p


def random_monogenic(k: int, m: int, seed: int) -> SphericalMonogenic:
    for attempt in range(100):
        comp = fischer_decompose(random_homogeneous(k, m, seed + 7919 * attempt), k).components[0]
        if not comp.poly.is_zero():
            # a positive multiple is the component of an equally random input
            return SphericalMonogenic(clear_denominators(comp.poly), k)
    raise RuntimeError("could not draw a nonzero monogenic")  # pragma: no cover


def random_axial_monogenic(k: int, m: int, seed: int) -> CliffordPolynomial:
    """Random homogeneous monogenic of degree k in x0, ..., xm.

    Built as the CK extension of a generic (non-monogenic) polynomial, so all
    Fischer slots of its restriction to x0 = 0 are populated.
    """
    return ck_extend(random_homogeneous(k, m, seed))
