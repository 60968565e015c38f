"""Command-line front end: ``superradon verify|radon|invert|pizzetti|kernel``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from .algebra.compose import DomainError
from .algebra.dims import Dims
from .algebra.superpoly import SuperPolynomial
from .distributions.superkernels import UnsupportedCase, riesz_kernel, super_power
from .literal import LiteralError, parse_polynomial
from .radon.gaussian import GaussianSuperFunction
from .radon.inversion import inversion_case, inversion_report
from .radon.transform import radon_transform
from .sphere.integrals import ContractViolation, normalized_integral, pizzetti
from .sphere.quadrature import sphere_quadrature
from .suites import GROUPS, SUITES, SuiteConfig, evaluation_points, resolve_suites, run_suites, sample_superfunction

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULTS = {
    "dims": None,
    "suite": ["all"],
    "tol": None,
    "sphere_degree": 24,
    "seed": 0,
    "out": None,
    "timing": False,
    "workers": 1,
}


class UsageError(Exception):
    pass


def parse_dims(text: str) -> Dims:
    try:
        d = Dims.parse(text)
    except ValueError as exc:
        raise UsageError(f"--dims: {exc}") from None
    if d.m < 0 or d.n < 0:
        raise UsageError("--dims: dimensions must be non-negative")
    return d


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def load_config(path: Optional[str]) -> dict:
    if not path:
        return {}
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    except tomllib.TOMLDecodeError as exc:
        raise UsageError(f"invalid config {path}: {exc}") from None
    out = {}
    for key, val in data.items():
        key = key.replace("-", "_")
        if key not in DEFAULTS:
            raise UsageError(f"unknown config key {key!r}")
        if key in ("dims", "suite") and isinstance(val, str):
            val = [val]
        out[key] = val
    return out


def merged(args: argparse.Namespace, keys: Sequence[str]) -> dict:
    """Defaults, then the config file, then explicit flags."""
    cfg = {k: DEFAULTS[k] for k in keys}
    cfg.update({k: v for k, v in load_config(getattr(args, "config", None)).items() if k in keys})
    for k in keys:
        v = getattr(args, k, None)
        if v is not None and v is not False:
            cfg[k] = v
    return cfg


def _dump(payload, out: Optional[str]) -> None:
    text = json.dumps(payload, indent=2, sort_keys=False) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands

def cmd_verify(args) -> int:
    cfg = merged(args, ("dims", "suite", "tol", "sphere_degree", "seed", "out", "timing", "workers"))
    try:
        names = resolve_suites(cfg["suite"])
    except KeyError as exc:
        raise UsageError(f"unknown suite {exc.args[0]!r}; choose from {', '.join(sorted({*SUITES, *GROUPS}))}") \
            from None
    dims = [parse_dims(d) if isinstance(d, str) else d for d in cfg["dims"]] if cfg["dims"] else None
    if cfg["tol"] is not None and not float(cfg["tol"]) > 0:
        raise UsageError("--tol must be positive")
    if int(cfg["sphere_degree"]) < 1:
        raise UsageError("--sphere-degree must be positive")
    conf = SuiteConfig(tol=None if cfg["tol"] is None else float(cfg["tol"]),
                       sphere_degree=int(cfg["sphere_degree"]), seed=int(cfg["seed"]))
    records = run_suites(names, dims, conf, workers=int(cfg["workers"]))
    rows = []
    for r in records:
        d = r.as_dict()
        if not cfg["timing"]:
            d["wall_time"] = None
        rows.append(d)
    _dump(rows, cfg["out"])
    counts = {s: sum(r.status == s for r in records) for s in ("pass", "fail", "unsupported")}
    print(f"{len(records)} records: {counts['pass']} pass, {counts['fail']} fail, "
          f"{counts['unsupported']} unsupported", file=sys.stderr)
    return EXIT_FAIL if counts["fail"] else EXIT_OK


def builtin_function(name: str, dims: Dims) -> GaussianSuperFunction:
    """Named Gaussian-class inputs for the radon and invert commands."""
    if name == "gaussian":
        return GaussianSuperFunction.gaussian(dims)
    if name == "shifted":
        return GaussianSuperFunction.gaussian(dims, [0.5] + [-0.25] * (dims.m - 1))
    if name == "gaussian_xf1":
        if not dims.n:
            raise UsageError("gaussian_xf1 needs n >= 1")
        return GaussianSuperFunction.from_polynomial(SuperPolynomial.fermionic(dims, 1))
    if name == "sample":
        return sample_superfunction(dims)
    raise UsageError(f"unknown function {name!r}; choose from {', '.join(BUILTINS)}")


BUILTINS = ("gaussian", "shifted", "gaussian_xf1", "sample")


def cmd_radon(args) -> int:
    cfg = merged(args, ("sphere_degree",))
    dims = parse_dims(args.dims)
    if dims.m == 0:
        raise UsageError("the Radon transform needs m >= 1")
    phi = builtin_function(args.phi, dims)
    quad = sphere_quadrature(dims.m, int(cfg["sphere_degree"]))
    p = np.linspace(-args.p_max, args.p_max, args.p_samples)
    data = radon_transform(phi)
    rows = data.to_csv(args.out or sys.stdout, quad.nodes, p)
    if args.out:
        print(f"wrote {rows} rows to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_invert(args) -> int:
    cfg = merged(args, ("sphere_degree", "out", "timing", "workers"))
    dims = parse_dims(args.dims)
    if dims.m == 0:
        raise UsageError("use `verify --suite fermionic` for m = 0")
    try:
        points = [tuple(float(v) for v in p.split(",")) for p in args.point] if args.point \
            else evaluation_points(dims.m)
    except ValueError:
        raise UsageError("--point takes comma-separated numbers") from None
    for p in points:
        if len(p) != dims.m:
            raise UsageError(f"point {p} needs {dims.m} coordinates")
    if inversion_case(dims) == "unsupported":
        budget = {"sphere_degree": int(cfg["sphere_degree"])}
        _dump([{"case": "unsupported", "dims": f"{dims.m},{dims.n}", "y": list(p), "recovered": None,
                "reference": None, "abs_err": None, "rel_err": None, "quadrature_budget": budget}
               for p in points], cfg["out"])
        return EXIT_OK
    phi = builtin_function(args.phi, dims)
    records = inversion_report(phi, points, int(cfg["sphere_degree"]), int(cfg["workers"]))
    rows = []
    for r in records:
        d = r.as_dict()
        if not cfg["timing"]:
            d.pop("wall_time")
        rows.append(d)
    _dump(rows, cfg["out"])
    return EXIT_OK


def cmd_pizzetti(args) -> int:
    dims = parse_dims(args.dims)
    try:
        P = parse_polynomial(args.polynomial, dims)
    except LiteralError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.normalized:
        try:
            value = normalized_integral(P)
        except (DomainError, ContractViolation) as exc:
            raise UsageError(str(exc)) from None
    else:
        value = pizzetti(P)
    print(value)
    return EXIT_OK


def cmd_kernel(args) -> int:
    dims = parse_dims(args.dims)
    param = parse_rational(args.param)
    try:
        if args.family == "power":
            exp = super_power(dims, param)
            scale = None
        else:
            K = riesz_kernel(dims, param)
            exp, scale = K.expansion, K.H
    except (UnsupportedCase, DomainError) as exc:
        raise UsageError(str(exc)) from None
    terms = [{"j": j, "fermionic_power": 2 * j, "bosonic_power": str(exp.base - 2 * j), "coefficient": str(c)}
             for j, c in enumerate(exp.coeffs)]
    payload = {"dims": f"{dims.m},{dims.n}", "family": args.family, "param": str(param), "terms": terms}
    if scale is not None:
        payload["normalization"] = str(scale)
    _dump(payload, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="superradon", description="Super Radon transform verification tools.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and write a JSON report")
    v.add_argument("--suite", action="append", help="suite or group id (repeatable; default all)")
    v.add_argument("--dims", action="append", help="m,n (repeatable; default per suite)")
    v.add_argument("--tol", type=float, help="override every numeric tolerance")
    v.add_argument("--sphere-degree", dest="sphere_degree", type=int, help="sphere quadrature exactness degree")
    v.add_argument("--seed", type=int, help="seed for random test inputs")
    v.add_argument("--out", help="report path (default stdout)")
    v.add_argument("--timing", action="store_true", default=None, help="record wall times")
    v.add_argument("--workers", type=int, help="worker processes")
    v.add_argument("--config", help="TOML file with the same keys as the flags")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("radon", help="write R[phi] samples as CSV rows (subset_mask, w_node, p, value)")
    r.add_argument("--dims", required=True)
    r.add_argument("--phi", default="gaussian", help=f"one of {', '.join(BUILTINS)}")
    r.add_argument("--sphere-degree", dest="sphere_degree", type=int)
    r.add_argument("--p-samples", dest="p_samples", type=int, default=9)
    r.add_argument("--p-max", dest="p_max", type=float, default=3.0)
    r.add_argument("--out", help="CSV path (default stdout)")
    r.add_argument("--config")
    r.set_defaults(func=cmd_radon)

    i = sub.add_parser("invert", help="invert R[phi] at points and write JSON inversion records")
    i.add_argument("--dims", required=True)
    i.add_argument("--phi", default="sample", help=f"one of {', '.join(BUILTINS)}")
    i.add_argument("--point", action="append", help="comma-separated bosonic point (repeatable)")
    i.add_argument("--sphere-degree", dest="sphere_degree", type=int)
    i.add_argument("--out")
    i.add_argument("--timing", action="store_true", default=None)
    i.add_argument("--workers", type=int)
    i.add_argument("--config")
    i.set_defaults(func=cmd_invert)

    p = sub.add_parser("pizzetti", help="exact supersphere integral of a polynomial literal")
    p.add_argument("polynomial", help="e.g. '3/2*x1^2*xf1*xf2 - x2 + 1'")
    p.add_argument("--dims", required=True)
    p.add_argument("--normalized", action="store_true", help="integral divided by the vanishing area (M = -2k)")
    p.set_defaults(func=cmd_pizzetti)

    k = sub.add_parser("kernel", help="coefficients of |x|^lam or the Riesz kernel K_gamma")
    k.add_argument("--dims", required=True)
    k.add_argument("--family", choices=("power", "riesz"), default="power")
    k.add_argument("--param", required=True, help="lam for power, gamma for riesz (rational)")
    k.add_argument("--out")
    k.set_defaults(func=cmd_kernel)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
