"""Command-line front end.

JSON goes to stdout, diagnostics to stderr.  Exit status: 0 when every
verification holds, 1 when a verification fails (the report is still
printed), 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .axial import RadialPolynomial, d_lower, d_upper, seed_to_pair
from .fueter import (
    OMEGA,
    SCALAR,
    FueterConfig,
    fueter_axial,
    fueter_higher,
    fueter_spatial,
    laplacian_power_axial,
    lift_variant,
)
from .polynomial import CliffordPolynomial, is_monogenic, laplacian_power
from .seedparse import parse_seed
from .spherical import (
    SphericalMonogenic,
    ck_extend,
    fischer_decompose,
    random_axial_monogenic,
    random_monogenic,
)
from .verification import DEFAULT_RNG_SEED, SUITES, run_suite


class UsageError(Exception):
    pass


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload) + "\n")


def _read_json(path: str):
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"no such file: {path}")
    try:
        return json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from exc


def _read_poly(path: str, m: int) -> CliffordPolynomial:
    poly = CliffordPolynomial.from_json(_read_json(path))
    if poly.m != m:
        raise UsageError(f"{path}: polynomial has m={poly.m}, expected m={m}")
    return poly


def _spatial_factor(args, path: str | None) -> SphericalMonogenic:
    if path and args.random_pk is not None:
        raise UsageError("give either a factor file or --random-pk, not both")
    if path:
        poly = _read_poly(path, args.m)
        k = args.k if args.k is not None else max(poly.degree(), 0)
        return SphericalMonogenic(poly, k)
    if args.random_pk is not None:
        return random_monogenic(args.random_pk, args.m, args.rng_seed)
    return SphericalMonogenic(CliffordPolynomial.constant(args.m, 1), 0)


def _check_k(args, k: int) -> None:
    if args.k is not None and args.k != k:
        raise UsageError(f"--k {args.k} does not match the degree {k} of the monogenic factor")


def cmd_transform(args) -> int:
    FueterConfig(args.m, 0, args.p)
    f = parse_seed(args.seed)
    P = _spatial_factor(args, args.input)
    _check_k(args, P.k)
    if args.p == 0:
        report = fueter_spatial(f, P, args.m)
    else:
        report = fueter_higher(seed_to_pair(f), P, args.m, args.p)
    _emit(report.to_json())
    return 0 if report.ok else 1


def cmd_transform_axial(args) -> int:
    FueterConfig(args.m)
    f = parse_seed(args.seed)
    if args.input and args.random_pk is not None:
        raise UsageError("give either --in or --random-pk, not both")
    if args.input:
        Q = _read_poly(args.input, args.m)
        k = args.k if args.k is not None else max(Q.degree(), 0)
    elif args.random_pk is not None:
        k = args.random_pk
        Q = random_axial_monogenic(k, args.m, args.rng_seed)
    else:
        raise UsageError("transform-axial needs --in or --random-pk")
    _check_k(args, k)
    report = fueter_axial(f, Q, args.m, k)
    _emit(report.to_json())
    return 0 if report.ok else 1


def cmd_ck_extend(args) -> int:
    g = _read_poly(args.input, args.m)
    out = ck_extend(g)
    _emit(out.to_json())
    return 0 if is_monogenic(out) and out.at_x0_zero() == g else 1


def cmd_fischer(args) -> int:
    P = _read_poly(args.input, args.m)
    dec = fischer_decompose(P, args.k)
    _emit(dec.to_json())
    return 0 if dec.reassemble() == P else 1


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.m is not None:
        FueterConfig(args.m)
    results = [run_suite(n, m=args.m, trials=args.trials, rng_seed=args.rng_seed) for n in names]
    passed = all(r.passed for r in results)
    _emit({"passed": passed, "rng_seed": args.rng_seed, "suites": [r.to_json() for r in results]})
    for r in results:
        print(f"{r.name}: {r.cases} cases, {'ok' if r.passed else 'FAILED'}", file=sys.stderr)
    return 0 if passed else 1


def cmd_lemma_check(args) -> int:
    g = RadialPolynomial.from_json(_read_json(args.input))
    n = args.n
    checks = {}
    if g.parity == "even":
        checks["radial_i"] = d_lower(n, g).d_r().d_r() == (
            d_lower(n, g.d_r().d_r()) - d_lower(n + 1, g).scale(2 * n)
        )
        checks["radial_iii"] = d_upper(n, g.d_r()) == d_lower(n, g).d_r()
        variant = SCALAR
    else:
        checks["radial_ii"] = d_upper(n, g).d_r().d_r() == (
            d_upper(n, g.d_r().d_r()) - d_upper(n + 1, g).scale(2 * n)
        )
        checks["radial_iv"] = (d_lower(n, g.d_r()) - d_upper(n, g).d_r()) == d_upper(n, g).div_r().scale(2 * n)
        variant = OMEGA
    P = _spatial_factor(args, args.pk_input)
    _check_k(args, P.k)
    radial = laplacian_power_axial(n, g, P.k, args.m, variant)
    cartesian = laplacian_power(n, lift_variant(g, P.poly, variant))
    checks["closed_form"] = cartesian == lift_variant(radial, P.poly, variant)
    passed = all(checks.values())
    _emit({"n": n, "k": P.k, "m": args.m, "variant": variant, "radial": radial.to_json(),
           "checks": checks, "passed": passed})
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monogenic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, m_required=True):
        p.add_argument("--m", type=int, required=m_required, help="dimension of R^m (odd for transforms)")
        p.add_argument("--rng-seed", type=int, default=DEFAULT_RNG_SEED)

    def factor_options(p, help_text):
        p.add_argument("--k", type=int, default=None, help="degree of the monogenic factor")
        p.add_argument("--in", dest="input", metavar="FILE", help=help_text)
        p.add_argument("--random-pk", type=int, metavar="DEG", help="draw a random factor of this degree")

    p = sub.add_parser("transform", help="Fueter transform with a monogenic factor P_k(x_vec)")
    common(p)
    p.add_argument("--p", type=int, default=0, help="order of holomorphy of the seed (default 0)")
    p.add_argument("--seed", required=True, help='seed polynomial, e.g. "3*z^4 - z + 1/2"')
    factor_options(p, ".cpoly.json file holding P_k(x_vec)")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("transform-axial", help="Fueter transform with a monogenic factor P_k(x0, x_vec)")
    common(p)
    p.add_argument("--seed", required=True)
    factor_options(p, ".cpoly.json file holding P_k(x0, x_vec)")
    p.set_defaults(func=cmd_transform_axial)

    p = sub.add_parser("ck-extend", help="monogenic extension of a polynomial in x_vec")
    common(p)
    p.add_argument("--in", dest="input", metavar="FILE", required=True)
    p.set_defaults(func=cmd_ck_extend)

    p = sub.add_parser("fischer", help="Fischer decomposition of a homogeneous polynomial")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--in", dest="input", metavar="FILE", required=True)
    p.set_defaults(func=cmd_fischer)

    p = sub.add_parser("verify", help="run randomized verification suites")
    common(p, m_required=False)
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--trials", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lemma-check", help="radial operator identities on one radial polynomial")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--in", dest="input", metavar="FILE", required=True, help="radial polynomial JSON")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--pk", dest="pk_input", metavar="FILE", help=".cpoly.json file holding P_k(x_vec)")
    p.add_argument("--random-pk", type=int, metavar="DEG")
    p.set_defaults(func=cmd_lemma_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
