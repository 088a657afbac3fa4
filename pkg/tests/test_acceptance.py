"""Acceptance criteria, one PASS/FAIL line each.

All checks are exact polynomial identities (zero tolerance).  The lines are
printed in the "acceptance criteria" section of the pytest summary; run with
``pytest tests/test_acceptance.py`` or ``python3 tests/test_acceptance.py``.
"""
import json
import subprocess
import sys
import time
from math import comb

import pytest

from monogenic.axial import HolomorphicSeed
from monogenic.fueter import fueter_spatial
from monogenic.polynomial import CliffordPolynomial
from monogenic.spherical import random_homogeneous, random_monogenic
from monogenic.verification import SUITES


def report(log, number, title, ok, seconds, budget, detail=""):
    within = seconds < budget
    status = "PASS" if ok and within else "FAIL"
    line = f"[{status}] criterion {number:2d}: {title} ({seconds:.1f}s, budget {budget:g}s){' ' + detail if detail else ''}"
    log(line)
    assert ok, line
    assert within, line


def timed(*names):
    start = time.perf_counter()
    results = [SUITES[n]() for n in names]
    return results, time.perf_counter() - start


def summary(results):
    parts = []
    for r in results:
        part = f"{r.name}: {r.cases} cases"
        if r.nonzero_outputs is not None:
            part += f", {r.nonzero_outputs} nonzero outputs"
        if r.failures:
            part += f", first failure {r.failures[0]}"
        parts.append(part)
    return "; ".join(parts)


def test_criterion_01_spatial_monogenicity(acceptance_log):
    (r,), t = timed("thm11")
    # m in {3,5} x k in {0,1,2} x n in 1..5 x 3 factors
    ok = r.passed and r.cases == 2 * 3 * 5 * 3
    report(acceptance_log, 1, "Fueter transform with P_k(x_vec) is monogenic", ok, t, 30, summary([r]))


def test_criterion_02_radial_identities(acceptance_log):
    (r,), t = timed("lemma21")
    ok = r.passed and r.cases == 50 * 4 * 4
    report(acceptance_log, 2, "radial operator identities (i)-(iv)", ok, t, 5, summary([r]))


def test_criterion_03_laplacian_dual_path(acceptance_log):
    (r,), t = timed("lemma22")
    ok = r.passed and r.cases == 2 * 3 * 4 * 2 * 10
    report(acceptance_log, 3, "Cartesian Laplacian powers equal the radial closed form", ok, t, 60, summary([r]))


def test_criterion_04_polyharmonic(acceptance_log):
    (r,), t = timed("prop23")
    ok = r.passed and r.cases == 2 * 10 * 2 * 2
    report(acceptance_log, 4, "polyharmonic lift is polyharmonic", ok, t, 30, summary([r]))


def test_criterion_05_higher_order(acceptance_log):
    (r,), t = timed("thm24")
    # three checks per case: monogenic, constant * lift(A, B), Vekua
    ok = r.passed and r.cases == 2 * 3 * 3 * 2 * 3
    report(acceptance_log, 5, "higher-order transform: monogenic, A/B form, Vekua system", ok, t, 60, summary([r]))


def test_criterion_06_ck_and_fischer(acceptance_log):
    results, t = timed("ck", "fischer", "ck-reassembly")
    ok = all(r.passed and r.cases > 0 for r in results)
    report(acceptance_log, 6, "CK extension, Fischer decomposition, CK reassembly", ok, t, 60, summary(results))


def test_criterion_07_dirac_closed_form(acceptance_log):
    (r,), t = timed("closed-form")
    ok = r.passed and r.cases == 2 * 7 * 2
    report(acceptance_log, 7, "closed form for dirac(x_vec^n M) against brute force", ok, t, 10, summary([r]))


def test_criterion_08_axial_factor(acceptance_log):
    (r,), t = timed("thm33")
    # two checks per case: paths agree, output monogenic
    ok = r.passed and r.cases == 2 * 3 * 5 * 3 * 2
    report(acceptance_log, 8, "transform with P_k(x0, x_vec): both paths agree, output monogenic", ok, t, 300, summary([r]))


def oracle_fueter_power(n, m):
    """Independent oracle for the transform of z^n with P = 1 and m = 3.

    Writes (x0 + x_vec)^n componentwise as scalar polynomials in x0..xm and
    applies the ordinary Laplacian once (k + (m-1)/2 = 1).  Returns
    ``{blade: {exponents: coeff}}``.
    """
    nvars = m + 1

    def mono_mul(p, q):
        out = {}
        for a, x in p.items():
            for b, y in q.items():
                e = tuple(i + j for i, j in zip(a, b))
                out[e] = out.get(e, 0) + x * y
        return {e: c for e, c in out.items() if c}

    def unit(i=None, power=1):
        e = [0] * nvars
        if i is not None:
            e[i] = power
        return {tuple(e): 1}

    norm = {}
    for j in range(1, m + 1):
        norm.update(unit(j, 2))
    # (x0 + i r)^n with x_vec = omega r: real part scalar, imaginary part along omega
    scalar, radial = {}, {}
    for b in range(n + 1):
        c = comb(n, b) * (1, 1, -1, -1)[b % 4]
        term = {(0,) * nvars: c}
        for _ in range(n - b):
            term = mono_mul(term, unit(0))
        for _ in range(b // 2):
            term = mono_mul(term, norm)
        target = scalar if b % 2 == 0 else radial
        for e, v in term.items():
            target[e] = target.get(e, 0) + v
    comps = {(): scalar}
    for j in range(1, m + 1):
        comps[(j,)] = mono_mul(radial, unit(j))

    def lap(p):
        out = {}
        for e, c in p.items():
            for i in range(nvars):
                if e[i] >= 2:
                    f = list(e)
                    f[i] -= 2
                    f = tuple(f)
                    out[f] = out.get(f, 0) + c * e[i] * (e[i] - 1)
        return {e: c for e, c in out.items() if c}

    return {b: q for b, q in ((b, lap(p)) for b, p in comps.items()) if q}


def as_components(p):
    out = {}
    for e, mv in p.terms.items():
        for b, c in mv.terms.items():
            out.setdefault(b, {})[e] = c
    return out


def test_criterion_09_spot_values(acceptance_log):
    start = time.perf_counter()
    m = 3
    z1 = fueter_spatial(HolomorphicSeed.monomial(1), None, m).output
    z2 = fueter_spatial(HolomorphicSeed.monomial(2), None, m).output
    ok = (
        z1.is_zero()
        and z2 == CliffordPolynomial.constant(m, -4)
        and as_components(z1) == oracle_fueter_power(1, m)
        and as_components(z2) == oracle_fueter_power(2, m)
        and as_components(fueter_spatial(HolomorphicSeed.monomial(5), None, m).output) == oracle_fueter_power(5, m)
    )
    t = time.perf_counter() - start
    report(acceptance_log, 9, "spot values z -> 0 and z^2 -> -4 against an independent Laplacian", ok, t, 1)


def test_criterion_10_cli_round_trip_and_determinism(acceptance_log):
    start = time.perf_counter()
    ok = True
    for seed in range(20):
        m = 3 if seed % 2 else 5
        p = random_homogeneous(seed % 4, m, seed) + CliffordPolynomial.variable(m, 0) * random_monogenic(
            seed % 3, m, seed
        ).poly
        text = json.dumps(p.to_json())
        back = CliffordPolynomial.from_json(json.loads(text))
        ok = ok and back == p and json.dumps(back.to_json()) == text
    argv = [sys.executable, "-m", "monogenic", "transform", "--m", "3", "--random-pk", "2", "--seed", "z^6 - 1/2*z"]
    runs = [subprocess.run(argv, capture_output=True) for _ in range(3)]
    ok = ok and all(r.returncode == 0 for r in runs) and len({r.stdout for r in runs}) == 1 and runs[0].stdout
    t = time.perf_counter() - start
    report(acceptance_log, 10, "JSON round trip on 20 random polynomials; repeated invocations byte-identical", ok, t, 5)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
