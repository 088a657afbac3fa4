"""Fueter-type transforms from planar seeds to monogenic polynomials.

Every driver computes the Cartesian result by brute force (powers of the
Laplacian on a lifted polynomial) and checks it against an independent
route: the radial closed form, the A/B components, or the Fischer/CK
splitting of the extra monogenic factor.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .axial import (
    EVEN,
    ODD,
    AxialPair,
    HolomorphicSeed,
    RadialPolynomial,
    d_lower,
    d_upper,
    delta_z,
    delta_z_power,
    is_p_holomorphic,
    lift,
    seed_to_pair,
    vekua_check,
)
from .polynomial import (
    CliffordPolynomial,
    cauchy_riemann,
    is_homogeneous,
    is_monogenic,
    laplacian_power,
    multiply,
)
from .spherical import SphericalMonogenic, ck_axial_form, fischer_decompose

SCALAR = "scalar"
OMEGA = "omega"


class EvenDimensionError(ValueError):
    """The transforms here are only defined for odd m."""


class HypothesisError(ValueError):
    """An input violates the hypothesis of the transform."""


@dataclass(frozen=True)
class FueterConfig:
    m: int
    k: int = 0
    p: int = 0

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 3:
            raise ValueError(f"m must be an integer >= 3, got {self.m!r}")
        if self.m % 2 == 0:
            raise EvenDimensionError(f"m={self.m} is even; only odd m is supported")
        if self.k < 0 or self.p < 0:
            raise ValueError("k and p must be nonnegative")

    @property
    def half(self) -> int:
        return (self.m - 1) // 2

    @property
    def exponent(self) -> int:
        """Power of the Laplacian applied by the transform."""
        return self.p + self.k + self.half

    def to_json(self) -> dict:
        return {"m": self.m, "k": self.k, "p": self.p}


@dataclass
class TransformReport:
    config: FueterConfig
    output: CliffordPolynomial
    monogenic: bool
    seed: HolomorphicSeed | None = None
    pair: AxialPair | None = None
    P: CliffordPolynomial | None = None
    paths_agree: bool | None = None
    vekua_ok: bool | None = None
    residual: CliffordPolynomial | None = None
    components: tuple | None = field(default=None, repr=False)

    def __post_init__(self):
        if not self.monogenic and self.residual is None:
            self.residual = cauchy_riemann(self.output)

    @property
    def output_is_zero(self) -> bool:
        return self.output.is_zero()

    @property
    def ok(self) -> bool:
        return self.monogenic and self.paths_agree is not False and self.vekua_ok is not False

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json(),
            "output": self.output.to_json(),
            "monogenic": self.monogenic,
            "paths_agree": self.paths_agree,
            "vekua_ok": self.vekua_ok,
            "residual": None if self.residual is None else self.residual.to_json(),
            "output_is_zero": self.output_is_zero,
        }


def d_coeff(k: int, m: int, j: int) -> int:
    """(2k+m-1)(2k+m-3)...(2k+m-(2j-1)); 1 for j = 0."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    out = 1
    for i in range(1, j + 1):
        out *= 2 * k + m - (2 * i - 1)
        if out == 0:
            break
    return out


def laplacian_power_axial(n: int, g: RadialPolynomial, k: int, m: int, variant: str = SCALAR) -> RadialPolynomial:
    """Radial coefficient of Delta_x^n (g P) or Delta_x^n (g omega P)."""
    if variant == SCALAR:
        op, parity = d_lower, EVEN
    elif variant == OMEGA:
        op, parity = d_upper, ODD
    else:
        raise ValueError(f"variant must be {SCALAR!r} or {OMEGA!r}")
    op(0, g)  # parity check
    laps = [g]
    for _ in range(n):
        laps.append(delta_z(laps[-1]))
    out = RadialPolynomial.zero(parity)
    for j in range(n + 1):
        d = d_coeff(k, m, j)
        if d:
            out = out + op(j, laps[n - j]).scale(d * comb(n, j))
    return out


def _as_spherical(P, m: int) -> SphericalMonogenic:
    if isinstance(P, SphericalMonogenic):
        if P.m != m:
            raise ValueError(f"P lives over R_0,{P.m}, expected m={m}")
        return P
    if P is None:
        return SphericalMonogenic(CliffordPolynomial.constant(m, 1), 0)
    raise TypeError("P must be a SphericalMonogenic")


def lift_variant(g: RadialPolynomial, P: CliffordPolynomial, variant: str) -> CliffordPolynomial:
    if variant == SCALAR:
        return lift(AxialPair(g, RadialPolynomial.zero(ODD)), P)
    if variant == OMEGA:
        return lift(AxialPair(RadialPolynomial.zero(EVEN), g), P)
    raise ValueError(f"variant must be {SCALAR!r} or {OMEGA!r}")


def fueter_spatial(f: HolomorphicSeed, P: SphericalMonogenic | None, m: int) -> TransformReport:
    Pk = _as_spherical(P, m)
    cfg = FueterConfig(m, Pk.k, 0)
    pair = seed_to_pair(f)
    out = laplacian_power(cfg.exponent, lift(pair, Pk.poly))
    return TransformReport(cfg, out, is_monogenic(out), seed=f, pair=pair, P=Pk.poly)


def polyharmonic_lift(g: RadialPolynomial, P: SphericalMonogenic | None, m: int, p: int, variant: str = SCALAR) -> CliffordPolynomial:
    Pk = _as_spherical(P, m)
    cfg = FueterConfig(m, Pk.k, 0)
    if p < 1:
        raise ValueError("polyharmonic order must be positive")
    if not delta_z_power(p, g).is_zero():
        raise HypothesisError(f"g is not annihilated by the {p}-th planar Laplacian power")
    return laplacian_power(cfg.exponent, lift_variant(g, Pk.poly, variant))


def ab_components(pair: AxialPair, k: int, m: int, p: int) -> tuple[RadialPolynomial, RadialPolynomial]:
    n = k + (m - 1) // 2
    A = d_lower(n, delta_z_power(p, pair.u))
    B = d_upper(n, delta_z_power(p, pair.v))
    return A, B


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def proof_constant(p: int, k: int, m: int) -> int:
    cfg = FueterConfig(m, k, p)
    return double_factorial(2 * k + m - 1) * comb(cfg.exponent, k + cfg.half)


def fueter_higher(pair: AxialPair, P: SphericalMonogenic | None, m: int, p: int) -> TransformReport:
    Pk = _as_spherical(P, m)
    cfg = FueterConfig(m, Pk.k, p)
    if not is_p_holomorphic(pair, p):
        raise HypothesisError(f"pair is not {p}-holomorphic")
    out = laplacian_power(cfg.exponent, lift(pair, Pk.poly))
    A, B = ab_components(pair, Pk.k, m, p)
    via_ab = lift(AxialPair(A, B), Pk.poly).scale(proof_constant(p, Pk.k, m))
    return TransformReport(
        cfg,
        out,
        is_monogenic(out),
        pair=pair,
        P=Pk.poly,
        paths_agree=(out == via_ab),
        vekua_ok=vekua_check(A, B, Pk.k, m),
    )


def fueter_axial(f: HolomorphicSeed, Q: CliffordPolynomial, m: int, k: int | None = None) -> TransformReport:
    if Q.m != m:
        raise ValueError(f"Q lives over R_0,{Q.m}, expected m={m}")
    if k is None:
        k = max(Q.degree(), 0)
    cfg = FueterConfig(m, k, 0)
    if not is_homogeneous(Q, k):
        raise HypothesisError(f"Q is not homogeneous of degree {k}")
    if not is_monogenic(Q):
        raise HypothesisError("Q is not monogenic")
    pair = seed_to_pair(f)

    direct = laplacian_power(cfg.exponent, multiply(lift(pair, None, m), Q))

    decomposition = fischer_decompose(Q.at_x0_zero(), k)
    via_fischer = CliffordPolynomial.zero(m)
    vekua_ok = True
    for n, M in enumerate(decomposition.components):
        if M.poly.is_zero():
            continue
        product = pair * ck_axial_form(n, k - n, m)
        if not is_p_holomorphic(product, n):
            raise HypothesisError(f"f * g_{n} is not {n + 1}-holomorphic")  # pragma: no cover
        part = fueter_higher(product, M, m, n)
        vekua_ok = vekua_ok and bool(part.vekua_ok) and bool(part.paths_agree)
        via_fischer = via_fischer + part.output

    return TransformReport(
        cfg,
        direct,
        is_monogenic(direct),
        seed=f,
        pair=pair,
        P=Q,
        paths_agree=(direct == via_fischer),
        vekua_ok=vekua_ok,
        components=decomposition.components,
    )
