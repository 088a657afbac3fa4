"""Randomized exact verification suites.

Each suite returns a ``SuiteResult``; a case fails when an exact polynomial
identity does not hold.  All randomness flows from one integer seed.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .axial import (
    EVEN,
    ODD,
    AxialPair,
    HolomorphicSeed,
    RadialPolynomial,
    d_lower,
    d_upper,
    lift,
    seed_to_pair,
    vekua_check,
)
from .fueter import (
    OMEGA,
    SCALAR,
    ab_components,
    fueter_axial,
    fueter_higher,
    fueter_spatial,
    laplacian_power_axial,
    lift_variant,
    polyharmonic_lift,
    proof_constant,
)
from .polynomial import (
    CliffordPolynomial,
    cauchy_riemann,
    dirac,
    is_monogenic,
    is_polyharmonic,
    laplacian,
    laplacian_power,
    multiply,
)
from .spherical import (
    ck_extend,
    dirac_power_on_xn_p,
    fischer_decompose,
    random_axial_monogenic,
    random_homogeneous,
    random_monogenic,
    vector_power,
)

DEFAULT_RNG_SEED = 20100406


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)
    nonzero_outputs: int | None = None

    @property
    def passed(self) -> bool:
        return self.cases > 0 and not self.failures

    def check(self, ok: bool, label: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(label)

    def to_json(self) -> dict:
        out = {"suite": self.name, "cases": self.cases, "passed": self.passed, "failures": list(self.failures)}
        if self.nonzero_outputs is not None:
            out["nonzero_outputs"] = self.nonzero_outputs
        return out


# random inputs


def random_radial(rng: random.Random, parity: str, max_degree: int, bound: int = 3) -> RadialPolynomial:
    start = 0 if parity == EVEN else 1
    terms = {}
    for b in range(start, max_degree + 1, 2):
        for a in range(max_degree - b + 1):
            terms[(a, b)] = rng.randint(-bound, bound)
    return RadialPolynomial(parity, terms)


def random_seed(rng: random.Random, degree: int, bound: int = 3) -> HolomorphicSeed:
    coeffs = [rng.randint(-bound, bound) for _ in range(degree)]
    top = rng.choice([c for c in range(-bound, bound + 1) if c])
    return HolomorphicSeed(tuple(coeffs) + (top,))


CONJ_Z = AxialPair(RadialPolynomial(EVEN, {(1, 0): 1}), RadialPolynomial(ODD, {(0, 1): -1}))
NORM_Z = RadialPolynomial(EVEN, {(2, 0): 1, (0, 2): 1})


def random_p_holomorphic(rng: random.Random, p: int, degree: int) -> AxialPair:
    """sum_{i<=p} zbar^i f_i(z): annihilated by dbar^(p+1), hence p-holomorphic."""
    out = AxialPair.zero()
    zbar = AxialPair(RadialPolynomial(EVEN, {(0, 0): 1}), RadialPolynomial.zero(ODD))
    for i in range(p + 1):
        out = out + zbar * seed_to_pair(random_seed(rng, max(degree - i, 0)))
        zbar = zbar * CONJ_Z
    return out


def random_polyharmonic(rng: random.Random, p: int, parity: str, degree: int) -> RadialPolynomial:
    """sum_{i<p} |z|^(2i) h_i with h_i harmonic and of the requested r-parity."""
    out = RadialPolynomial.zero(parity)
    weight = RadialPolynomial(EVEN, {(0, 0): 1})
    for i in range(p):
        pair = seed_to_pair(random_seed(rng, max(degree - 2 * i, 1)))
        h = pair.u if parity == EVEN else pair.v
        out = out + weight * h
        weight = weight * NORM_Z
    return out


# suites


def lemma21(trials: int = 50, max_degree: int = 8, orders=(0, 1, 2, 3), rng_seed: int = DEFAULT_RNG_SEED) -> SuiteResult:
    """The four radial operator identities, on random even and odd g."""
    rng = random.Random(rng_seed)
    res = SuiteResult("lemma21")
    for t in range(trials):
        ge = random_radial(rng, EVEN, rng.randint(0, max_degree))
        go = random_radial(rng, ODD, rng.randint(1, max_degree))
        for n in orders:
            lhs = d_lower(n, ge).d_r().d_r()
            rhs = d_lower(n, ge.d_r().d_r()) - d_lower(n + 1, ge).scale(2 * n)
            res.check(lhs == rhs, f"(i) trial={t} n={n}")
            lhs = d_upper(n, go).d_r().d_r()
            rhs = d_upper(n, go.d_r().d_r()) - d_upper(n + 1, go).scale(2 * n)
            res.check(lhs == rhs, f"(ii) trial={t} n={n}")
            res.check(d_upper(n, ge.d_r()) == d_lower(n, ge).d_r(), f"(iii) trial={t} n={n}")
            lhs = d_lower(n, go.d_r()) - d_upper(n, go).d_r()
            rhs = d_upper(n, go).div_r().scale(2 * n)
            res.check(lhs == rhs, f"(iv) trial={t} n={n}")
    return res


def lemma22(ms=(3, 5), ks=(0, 1, 2), ns=(0, 1, 2, 3), trials: int = 10, max_degree: int = 6,
            rng_seed: int = DEFAULT_RNG_SEED) -> SuiteResult:
    """Cartesian Laplacian powers against the radial closed form, both variants."""
    rng = random.Random(rng_seed)
    res = SuiteResult("lemma22")
    for m in ms:
        for k in ks:
            for n in ns:
                for variant, parity in ((SCALAR, EVEN), (OMEGA, ODD)):
                    for t in range(trials):
                        g = random_radial(rng, parity, rng.randint(1, max_degree))
                        P = random_monogenic(k, m, rng.randrange(1 << 30)).poly
                        cartesian = laplacian_power(n, lift_variant(g, P, variant))
                        radial = lift_variant(laplacian_power_axial(n, g, k, m, variant), P, variant)
                        res.check(cartesian == radial, f"m={m} k={k} n={n} {variant} trial={t}")
    return res


def prop23(ps=(1, 2), trials: int = 10, ms=(3, 5), ks=(0, 1), degree: int = 7,
           rng_seed: int = DEFAULT_RNG_SEED) -> SuiteResult:
    rng = random.Random(rng_seed)
    res = SuiteResult("prop23", nonzero_outputs=0)
    for p in ps:
        for t in range(trials):
            for m in ms:
                for variant, parity in ((SCALAR, EVEN), (OMEGA, ODD)):
                    k = rng.choice(ks)
                    g = random_polyharmonic(rng, p, parity, degree)
                    P = random_monogenic(k, m, rng.randrange(1 << 30))
                    out = polyharmonic_lift(g, P, m, p, variant)
                    res.nonzero_outputs += not out.is_zero()
                    res.check(is_polyharmonic(out, p), f"p={p} m={m} k={k} {variant} trial={t}")
    return res


def thm11(ms=(3, 5), ks=(0, 1, 2), ns=(1, 2, 3, 4, 5), per: int = 3,
          rng_seed: int = DEFAULT_RNG_SEED) -> SuiteResult:
    rng = random.Random(rng_seed)
    res = SuiteResult("thm11", nonzero_outputs=0)
    for m in ms:
        for k in ks:
            Ps = [random_monogenic(k, m, rng.randrange(1 << 30)) for _ in range(per)]
            for n in ns:
                for i, P in enumerate(Ps):
                    rep = fueter_spatial(HolomorphicSeed.monomial(n), P, m)
                    res.nonzero_outputs += not rep.output_is_zero
                    res.check(cauchy_riemann(rep.output).is_zero(), f"m={m} k={k} z^{n} P#{i}")
    return res


def thm24(ps=(0, 1, 2), ks=(0, 1, 2), ms=(3, 5), trials: int = 2, extra_degree: int = 1,
          rng_seed: int = DEFAULT_RNG_SEED) -> SuiteResult:
    """Output monogenic, equal to constant * lift(A, B) * P, and (A, B) Vekua."""
    rng = random.Random(rng_seed)
    res = SuiteResult("thm24", nonzero_outputs=0)
    for m in ms:
        for k in ks:
            for p in ps:
                exponent = p + k + (m - 1) // 2
                for t in range(trials):
                    # large enough to survive the Laplacian power
                    degree = 2 * exponent - k + 1 + rng.randint(0, extra_degree)
                    pair = random_p_holomorphic(rng, p, degree)
                    P = random_monogenic(k, m, rng.randrange(1 << 30))
                    rep = fueter_higher(pair, P, m, p)
                    A, B = ab_components(pair, k, m, p)
                    res.nonzero_outputs += not rep.output_is_zero
                    label = f"m={m} k={k} p={p} trial={t}"
                    res.check(rep.monogenic, label + " monogenic")
                    expected = lift(AxialPair(A, B), P.poly).scale(proof_constant(p, k, m))
                    res.check(rep.output == expected, label + " constant*lift(A,B)")
                    res.check(vekua_check(A, B, k, m), label + " vekua")
    return res


def ck(ms=(3, 5), max_degree: int = 4, trials: int = 5, rng_seed: int = DEFAULT_RNG_SEED) -> SuiteResult:
    rng = random.Random(rng_seed)
    res = SuiteResult("ck")
    for m in ms:
        for t in range(trials):
            g = CliffordPolynomial.zero(m)
            for d in range(rng.randint(0, max_degree) + 1):
                if rng.random() < 0.7:
                    g = g + random_homogeneous(d, m, rng.randrange(1 << 30))
            ext = ck_extend(g)
            res.check(is_monogenic(ext), f"m={m} trial={t} monogenic")
            res.check(ext.at_x0_zero() == g, f"m={m} trial={t} restriction")
    return res


def fischer(ms=(3, 5), ks=(0, 1, 2, 3, 4), trials: int = 2, rng_seed: int = DEFAULT_RNG_SEED) -> SuiteResult:
    rng = random.Random(rng_seed)
    res = SuiteResult("fischer")
    for m in ms:
        for k in ks:
            for t in range(trials):
                P = random_homogeneous(k, m, rng.randrange(1 << 30))
                dec = fischer_decompose(P, k)
                res.check(dec.reassemble() == P, f"m={m} k={k} trial={t} reassembly")
                res.check(all(dirac(c.poly).is_zero() for c in dec.components), f"m={m} k={k} trial={t} monogenic")
    return res


def ck_reassembly(ms=(3, 5), ks=(1, 2, 3), trials: int = 2, rng_seed: int = DEFAULT_RNG_SEED) -> SuiteResult:
    """sum_n CK[x_vec^n M_(k-n)] reproduces a monogenic homogeneous Q."""
    rng = random.Random(rng_seed)
    res = SuiteResult("ck_reassembly")
    for m in ms:
        for k in ks:
            for t in range(trials):
                Q = random_axial_monogenic(k, m, rng.randrange(1 << 30))
                dec = fischer_decompose(Q.at_x0_zero(), k)
                total = CliffordPolynomial.zero(m)
                for n, M in enumerate(dec.components):
                    total = total + ck_extend(multiply(vector_power(m, n), M.poly))
                res.check(total == Q, f"m={m} k={k} trial={t}")
    return res


def closed_form(ms=(3, 5), ns=tuple(range(7)), max_l: int = 3, trials: int = 2,
                rng_seed: int = DEFAULT_RNG_SEED) -> SuiteResult:
    rng = random.Random(rng_seed)
    res = SuiteResult("closed_form")
    for m in ms:
        for n in ns:
            for t in range(trials):
                l = rng.randint(0, max_l)
                M = random_monogenic(l, m, rng.randrange(1 << 30))
                brute = dirac(multiply(vector_power(m, n), M.poly))
                res.check(dirac_power_on_xn_p(n, M) == brute, f"m={m} n={n} l={l} trial={t}")
    return res


def thm33(ms=(3, 5), ks=(1, 2, 3), ns=(0, 1, 2, 3, 4), per: int = 3,
          rng_seed: int = DEFAULT_RNG_SEED) -> SuiteResult:
    rng = random.Random(rng_seed)
    res = SuiteResult("thm33", nonzero_outputs=0)
    for m in ms:
        for k in ks:
            Qs = [random_axial_monogenic(k, m, rng.randrange(1 << 30)) for _ in range(per)]
            for n in ns:
                for i, Q in enumerate(Qs):
                    rep = fueter_axial(HolomorphicSeed.monomial(n), Q, m, k)
                    res.nonzero_outputs += not rep.output_is_zero
                    label = f"m={m} k={k} z^{n} Q#{i}"
                    res.check(rep.paths_agree, label + " paths")
                    res.check(rep.monogenic, label + " monogenic")
    return res


def spot() -> SuiteResult:
    """Fixed values checked against a hand-built Laplacian of powers of x."""
    res = SuiteResult("spot")
    m = 3
    x = CliffordPolynomial.paravector(m)
    for n, expected_n in ((1, 0), (2, 1)):
        out = fueter_spatial(HolomorphicSeed.monomial(n), None, m).output
        oracle = laplacian(x ** n)
        res.check(out == oracle, f"z^{n} vs Laplacian(x^{n})")
        res.check(out == (-4 if expected_n else 0), f"z^{n} value")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "lemma21": lemma21,
    "lemma22": lemma22,
    "prop23": prop23,
    "thm11": thm11,
    "thm24": thm24,
    "ck": ck,
    "fischer": fischer,
    "ck-reassembly": ck_reassembly,
    "closed-form": closed_form,
    "thm33": thm33,
    "spot": spot,
}

# suites whose sweeps range over the dimension m
DIMENSIONAL = {"lemma22", "prop23", "thm11", "thm24", "ck", "fischer", "ck-reassembly", "closed-form", "thm33"}
# suites taking a trial count, and the keyword it maps onto
TRIAL_KEYWORD = {
    "lemma21": "trials",
    "lemma22": "trials",
    "prop23": "trials",
    "thm24": "trials",
    "ck": "trials",
    "fischer": "trials",
    "ck-reassembly": "trials",
    "closed-form": "trials",
    "thm11": "per",
    "thm33": "per",
}


def run_suite(name: str, m: int | None = None, trials: int | None = None,
              rng_seed: int = DEFAULT_RNG_SEED) -> SuiteResult:
    fn = SUITES[name]
    kwargs: dict = {}
    if name != "spot":
        kwargs["rng_seed"] = rng_seed
    if m is not None and name in DIMENSIONAL:
        kwargs["ms"] = (m,)
    if trials is not None and name in TRIAL_KEYWORD:
        kwargs[TRIAL_KEYWORD[name]] = trials
    return fn(**kwargs)
