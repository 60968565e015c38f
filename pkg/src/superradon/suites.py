"""Verification suites producing uniform report records.

Each suite runs one family of identities for one dimension pair and returns
ReportRecords.  Exact suites compare with ``==`` on exact values; numeric
suites pass when the relative error is within tolerance.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .algebra.dims import Dims
from .algebra.gamma import harmonic_number, sphere_area
from .algebra.grassmann import GrassmannElement
from .algebra.scalar import Scalar
from .algebra.superpoly import SuperPolynomial, clifford_square, vector
from .distributions.logprim import log_primitive_coeff, log_primitive_coeff_harmonic, log_primitive_eval
from .distributions.superkernels import (UnsupportedCase, chu_vandermonde_sum, coefficient_system_residuals,
                                         fundamental_solution_check)
from .operators import (commutator, dirac_anticommutator_check, dirac_square, half_laplacian, laplacian,
                        laplacian_power, laplacian_power_norm, minus_half_x2, shifted_euler)
from .planewave import (PlaneWaveIdentityCase, cauchy_boundary_check, higher_cauchy_jump, layer_moment,
                        log_layer_moment, polyharmonic_jump, standard_test_functions, verify_pw_identity)
from .radon.backprojection import backprojection_identity
from .radon.dual import SupervectorPoint, dual_radon
from .radon.gaussian import GaussianSuperFunction
from .radon.inversion import grassmann_error, invert, invert_fermionic, reference_value
from .radon.transform import central_slice_check, radon_transform
from .sphere.integrals import funk_hecke, funk_hecke_sides, harmonics, pizzetti, supersphere_integral_delta_route
from .sphere.quadrature import sphere_quadrature

STATUSES = ("pass", "fail", "unsupported")


@dataclass
class ReportRecord:
    suite: str
    case: str
    status: str
    lhs: object = None
    rhs: object = None
    abs_err: Optional[float] = None
    rel_err: Optional[float] = None
    tolerance: Optional[float] = None
    wall_time: Optional[float] = None

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class SuiteConfig:
    tol: Optional[float] = None
    sphere_degree: int = 24
    seed: int = 0
    samples: int = 50


def _text(v):
    if isinstance(v, tuple):
        return "(" + ", ".join(str(c) for c in v) + ")"
    if isinstance(v, (SuperPolynomial, GrassmannElement)):
        return v.to_text()
    if isinstance(v, (Scalar, Fraction)):
        return str(v)
    if isinstance(v, complex):
        return v.real if v.imag == 0 else str(v)
    return float(v) if isinstance(v, (int, float, np.floating)) else v


def _magnitude(v) -> float:
    if isinstance(v, tuple):
        return max((_magnitude(c) for c in v), default=0.0)
    if isinstance(v, SuperPolynomial):
        return max((abs(float(c)) for _, c in v.items()), default=0.0)
    if isinstance(v, GrassmannElement):
        return max((abs(complex(c)) for _, c in v.items()), default=0.0)
    return abs(complex(v))


def exact_record(suite, case, lhs, rhs) -> ReportRecord:
    ok = lhs == rhs
    delta = tuple(a - b for a, b in zip(lhs, rhs)) if isinstance(lhs, tuple) else lhs - rhs
    diff = _magnitude(delta)
    scale = _magnitude(rhs)
    return ReportRecord(suite, case, "pass" if ok else "fail", _text(lhs), _text(rhs), diff,
                        diff / scale if scale else diff, None)


def count_record(suite, case, matches: int, total: int) -> ReportRecord:
    """Exact check over a family: lhs counts agreeing members, rhs the family size."""
    return ReportRecord(suite, case, "pass" if matches == total else "fail", matches, total,
                        float(total - matches), (total - matches) / total if total else 0.0, None)


def numeric_record(suite, case, lhs, rhs, tol, absolute: bool = False) -> ReportRecord:
    if isinstance(lhs, GrassmannElement) or isinstance(rhs, GrassmannElement):
        a, r = grassmann_error(lhs, rhs)
    else:
        a = abs(complex(lhs) - complex(rhs))
        r = a / abs(complex(rhs)) if rhs else a
    measure = a if absolute else r
    return ReportRecord(suite, case, "pass" if measure <= tol else "fail", _text(lhs), _text(rhs), float(a),
                        float(r), float(tol))


def unsupported_record(suite, case, reason: str) -> ReportRecord:
    return ReportRecord(suite, case, "unsupported", reason, None)


def _tol(cfg: SuiteConfig, default: float) -> float:
    return default if cfg.tol is None else cfg.tol


def dims_label(d: Dims) -> str:
    return f"{d.m},{d.n}"


# ---------------------------------------------------------------------------
# test inputs

def monomials(dims: Dims, max_degree: int):
    """All monomials x^alpha x`_A with |alpha| + |A| <= max_degree, coefficient 1."""
    for mask in range(1 << dims.nferm):
        f = mask.bit_count()
        for tot in range(max_degree - f + 1):
            for alpha in itertools.product(range(tot + 1), repeat=dims.m):
                if sum(alpha) == tot:
                    yield SuperPolynomial.monomial(dims, alpha, mask, 1)


def random_polynomial(dims: Dims, rng: np.random.Generator, max_degree: int = 6, max_terms: int = 6
                      ) -> SuperPolynomial:
    pool = list(monomials(dims, max_degree))
    P = SuperPolynomial.zero(dims)
    for i in rng.choice(len(pool), size=int(rng.integers(1, max_terms + 1)), replace=True):
        c = Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 6)))
        P = P + pool[int(i)] * c
    return P


def random_rationals(rng: np.random.Generator, count: int) -> List[Fraction]:
    return [Fraction(int(rng.integers(-40, 41)), int(rng.integers(1, 13))) for _ in range(count)]


def sample_superfunction(dims: Dims) -> GaussianSuperFunction:
    """A Gaussian-class function touching every fermionic degree, off-centre."""
    b = [SuperPolynomial.bosonic(dims, i + 1) for i in range(dims.m)]
    f = [SuperPolynomial.fermionic(dims, i + 1) for i in range(dims.nferm)]
    P = SuperPolynomial.constant(dims) * 1.0
    if b:
        P = P + b[0] * 0.5
    if len(f) >= 2:
        lead = b[-1] if b else SuperPolynomial.constant(dims)
        quad = b[0] * b[0] - 0.3 if b else SuperPolynomial.constant(dims, -0.3)
        P = P + f[0] * lead * 0.7 + f[0] * f[1] * quad
    if len(f) >= 4:
        P = P + f[2] * f[3] * 0.4 + f[0] * f[1] * f[2] * f[3] * 0.25 + f[1] * f[2] * 0.6
    c = ([0.2, -0.1, 0.15, 0.05] + [0.0] * dims.m)[:dims.m]
    return GaussianSuperFunction.from_polynomial(P, center=c)


def evaluation_points(m: int, count: int = 5) -> List[Tuple[float, ...]]:
    base = [[0.0] * m, [0.5] + [0.0] * (m - 1), [0.3, -0.4] + [0.1] * (m - 2), [-0.6] + [0.25] * (m - 1),
            [0.1 * (i + 1) for i in range(m)]]
    return [tuple(p[:m]) for p in base[:count]]


# ---------------------------------------------------------------------------
# exact algebra

ALGEBRA_DIMS = [Dims(1, 1), Dims(2, 1), Dims(3, 1), Dims(0, 2), Dims(2, 2)]
ALGEBRA_DEGREE = 6


def suite_sl2(dims: Dims, cfg: SuiteConfig) -> List[ReportRecord]:
    x2 = clifford_square(vector(dims))
    rels = {
        "[D/2,-x^2/2]=E+M/2": (lambda F: commutator(half_laplacian, minus_half_x2, F), shifted_euler),
        "[D/2,E+M/2]=D": (lambda F: commutator(half_laplacian, shifted_euler, F), laplacian),
        "[-x^2/2,E+M/2]=x^2": (lambda F: commutator(minus_half_x2, shifted_euler, F), lambda F: x2 * F),
    }
    mons = list(monomials(dims, ALGEBRA_DEGREE))
    return [count_record("sl2", f"{dims_label(dims)} {name}", sum(lhs(F) == rhs(F) for F in mons), len(mons))
            for name, (lhs, rhs) in rels.items()]


def _dirac_square_matches(F: SuperPolynomial) -> bool:
    sq = dirac_square(F)
    return sq.is_scalar() and sq.scalar_part() == -laplacian(F)


def suite_dirac(dims: Dims, cfg: SuiteConfig) -> List[ReportRecord]:
    mons = list(monomials(dims, ALGEBRA_DEGREE))
    anti = sum(dirac_anticommutator_check(dims, F) == shifted_euler(F) * 2 for F in mons)
    return [count_record("dirac", f"{dims_label(dims)} dx+xd=2(E+M/2)", anti, len(mons)),
            count_record("dirac", f"{dims_label(dims)} Laplacian=-dirac^2", sum(map(_dirac_square_matches, mons)),
                         len(mons))]


def suite_lappowx(dims: Dims, cfg: SuiteConfig) -> List[ReportRecord]:
    x2 = clifford_square(vector(dims))
    out = []
    for ell in range(ALGEBRA_DEGREE // 2 + 1):
        for j in range(ell + 2):
            coeff, power = laplacian_power_norm(dims, j, ell)
            out.append(exact_record("lappowx", f"{dims_label(dims)} j={j} l={ell}",
                                    laplacian_power(x2 ** ell, j), power * coeff))
    return out


# ---------------------------------------------------------------------------
# sphere

def suite_sigma(dims: Optional[Dims], cfg: SuiteConfig) -> List[ReportRecord]:
    from scipy.special import rgamma
    out = []
    for M in range(-8, 9):
        got = sphere_area(M)
        if M <= 0 and M % 2 == 0:
            out.append(exact_record("sigma", f"M={M}", got, Scalar(0)))
        else:
            out.append(numeric_record("sigma", f"M={M}", float(got), 2 * math.pi ** (M / 2) * rgamma(M / 2),
                                      _tol(cfg, 1e-13)))
    return out


PIZZETTI_DIMS = [Dims(3, 0), Dims(2, 1), Dims(3, 1), Dims(2, 2), Dims(1, 2)]


def suite_pizzetti(dims: Dims, cfg: SuiteConfig) -> List[ReportRecord]:
    if dims.m == 0:
        return [unsupported_record("pizzetti", dims_label(dims), "the delta route needs m >= 1")]
    rng = np.random.default_rng([cfg.seed, dims.m, dims.n])
    quad = sphere_quadrature(dims.m, max(cfg.sphere_degree, 2 * ALGEBRA_DEGREE + 2))
    tol = _tol(cfg, 1e-8)
    out = []
    for i in range(cfg.samples):
        P = random_polynomial(dims, rng)
        exact = pizzetti(P)
        delta = supersphere_integral_delta_route(P, quad=quad)
        a = abs(float(exact) - float(delta))
        r = a / abs(float(exact)) if exact else a
        out.append(ReportRecord("pizzetti", f"{dims_label(dims)} #{i:02d}", "pass" if r <= tol else "fail",
                                str(exact), float(delta), a, r, tol))
    return out


FUNK_HECKE_DIMS = [Dims(3, 0), Dims(2, 1), Dims(3, 1), Dims(2, 2), Dims(2, 3)]


def suite_funk_hecke(dims: Dims, cfg: SuiteConfig) -> List[ReportRecord]:
    out = []
    label = dims_label(dims)
    for H in harmonics(dims, 3):
        for j in range(7):
            if dims.m:
                lhs, rhs = funk_hecke_sides(dims, j, H)
                out.append(exact_record("funk_hecke", f"{label} alpha j={j} H={H.to_text()}", lhs, rhs))
            if dims.M <= 0 and dims.M % 2 == 0 and j + H.degree() <= 1 - dims.M:
                lhs, rhs = funk_hecke_sides(dims, j, H, normalized=True)
                out.append(exact_record("funk_hecke", f"{label} alpha* j={j} H={H.to_text()}", lhs, rhs))
    return out


# ---------------------------------------------------------------------------
# distributions

def suite_techlem(dims: Optional[Dims], cfg: SuiteConfig) -> List[ReportRecord]:
    rng = np.random.default_rng([cfg.seed, 4])
    svals = random_rationals(rng, 20)
    out = []
    for ell in range(1, 13):
        matches = sum(chu_vandermonde_sum(ell, s) == 0 for s in svals)
        out.append(count_record("techlem", f"l={ell:02d} over {len(svals)} rational s", matches, len(svals)))
    return out


FUNDSOL_DIMS = [Dims(3, 1), Dims(2, 2)]
FUNDSOL_S = (Fraction(1, 2), Fraction(3, 2))


def suite_fundsol(dims: Dims, cfg: SuiteConfig) -> List[ReportRecord]:
    out = []
    label = dims_label(dims)
    for s in FUNDSOL_S:
        z = Fraction(dims.M, 2) - s
        factored = z.denominator == 1 and z <= 0
        res = coefficient_system_residuals(dims, s)
        out.append(count_record("fundsol", f"{label} s={s} coefficient residuals",
                                sum(r == 0 for r in res), len(res)))
        chk = fundamental_solution_check(dims, s, factored=factored)
        tag = " (common Gamma factor removed)" if factored else ""
        out.append(exact_record("fundsol", f"{label} s={s} assembled vs power{tag}",
                                tuple(chk.assembled),
                                tuple(chk.closed)))
        out.append(exact_record("fundsol", f"{label} s={s} closed sum vs power{tag}",
                                tuple(chk.series), tuple(chk.closed)))
    return out


# ---------------------------------------------------------------------------
# radon

CENTRAL_SLICE_DIMS = [Dims(2, 0), Dims(2, 1), Dims(3, 1)]


def suite_central_slice(dims: Dims, cfg: SuiteConfig) -> List[ReportRecord]:
    if dims.m == 0:
        return [unsupported_record("central_slice", dims_label(dims), "the slice needs m >= 1")]
    phi = sample_superfunction(dims)
    rng = np.random.default_rng([cfg.seed, 9, dims.m, dims.n])
    out = []
    for i in range(3):
        w = rng.normal(size=dims.m)
        w /= np.linalg.norm(w)
        for r in (0.0, 0.7, 1.9):
            lhs, rhs = central_slice_check(phi, w, r)
            rec = numeric_record("central_slice", f"{dims_label(dims)} w#{i} r={r}", lhs, rhs, _tol(cfg, 1e-8),
                                 absolute=True)
            out.append(rec)
    return out


INVERSION_DIMS = [Dims(3, 1), Dims(4, 1), Dims(2, 2)]
INVERSION_TOL = {1: 1e-3, 2: 1e-2, -2: 1e-2}


def suite_invert(dims: Dims, cfg: SuiteConfig) -> List[ReportRecord]:
    label = dims_label(dims)
    M = dims.M
    if dims.m == 0:
        return suite_fermionic(dims, cfg)
    if M < 0 and M % 2:
        return [unsupported_record("invert", f"{label} M={M}",
                                   "no inversion formula is available for odd negative superdimension")]
    phi = sample_superfunction(dims)
    data = radon_transform(phi)
    quad = sphere_quadrature(dims.m, cfg.sphere_degree)
    tol = _tol(cfg, INVERSION_TOL.get(M, 1e-2))
    out = []
    for y in evaluation_points(dims.m):
        got = invert(data, y, quad)
        out.append(numeric_record("invert", f"{label} y={list(y)}", got, reference_value(phi, y), tol))
    return out


def fermionic_basis(n: int) -> List[GrassmannElement]:
    return [GrassmannElement(2 * n, {A: 1}) for A in range(1 << (2 * n))]


def suite_fermionic(dims: Dims, cfg: SuiteConfig) -> List[ReportRecord]:
    n = dims.n
    out = []
    if n == 0:
        return [unsupported_record("fermionic", dims_label(dims), "no fermionic variables")]
    for phi in fermionic_basis(n):
        res = invert_fermionic(phi, n)
        out.append(exact_record("fermionic", f"0,{n} phi={phi.to_text()}", res.value, phi))
    if n == 1:
        res = invert_fermionic(GrassmannElement.one(2), 1)
        out.append(exact_record("fermionic", "0,1 prefactor", res.prefactor, Scalar(-1, 0) * Scalar.pi_power(2) / 2))
        out.append(exact_record("fermionic", "0,1 fermionic Laplacian value", res.laplacian_part.body(),
                                Scalar(-2) * Scalar.pi_power(-2)))
    return out


BACKPROJECTION_DIMS = [Dims(2, 0), Dims(3, 1)]


def suite_backprojection(dims: Dims, cfg: SuiteConfig) -> List[ReportRecord]:
    label = dims_label(dims)
    if dims.m == 0:
        return [unsupported_record("backprojection", label, "the identity needs m >= 1")]
    phi = sample_superfunction(dims)
    quad = sphere_quadrature(dims.m, cfg.sphere_degree)
    pts = evaluation_points(dims.m, 3)
    out = []
    try:
        pairs = backprojection_identity(phi, pts, quad)
    except UnsupportedCase as exc:
        return [unsupported_record("backprojection", label, str(exc))]
    for pr in pairs:
        out.append(numeric_record("backprojection", f"{label} x={pr.x} convolution", pr.lhs, pr.rhs,
                                  _tol(cfg, 1e-2)))
    if dims.M == 1:
        data = radon_transform(phi)
        for x in pts:
            lhs = dual_radon(data, x, quad)
            if not isinstance(lhs, GrassmannElement):
                lhs = GrassmannElement.one(phi.nparam, lhs)
            out.append(numeric_record("backprojection", f"{label} x={list(x)} equals 2 phi", lhs,
                                      reference_value(phi, x).map(lambda c: 2 * c), _tol(cfg, 1e-3)))
    return out


# ---------------------------------------------------------------------------
# plane waves and boundary values

def suite_planewave(dims: Optional[Dims], cfg: SuiteConfig) -> List[ReportRecord]:
    cases = [
        (PlaneWaveIdentityCase("PWDelRm_even", 2), 1e-3),
        (PlaneWaveIdentityCase("PWDelRm_odd", 3), 1e-3),
        (PlaneWaveIdentityCase("PWRLan", 2, lam=1), 1e-6),
        (PlaneWaveIdentityCase("PWRLan", 2, lam=Fraction(1, 2)), 1e-6),
        (PlaneWaveIdentityCase("PWRLan", 2, lam=Fraction(-1, 2)), 1e-6),
        (PlaneWaveIdentityCase("PWRLan", 3, lam=Fraction(1, 2)), 1e-6),
        (PlaneWaveIdentityCase("PrincEven", 2, ell=1), 1e-3),
        (PlaneWaveIdentityCase("PrincOdd", 3, ell=1), 1e-3),
    ]
    out = []
    for case, tol in cases:
        quad = sphere_quadrature(case.m, cfg.sphere_degree)
        for name, phi in standard_test_functions(case.m):
            r = verify_pw_identity(case, phi, quad)
            par = f" lam={case.lam}" if case.identity == "PWRLan" else f" l={case.ell}" if case.ell else ""
            tag = f"{case.identity} m={case.m}{par} {name}"
            absolute = r.rhs == 0 or abs(r.rhs) < 1e-12
            out.append(numeric_record("plane_waves", tag, r.lhs, r.rhs, _tol(cfg, tol), absolute=absolute))
    return out


def suite_boundary(dims: Optional[Dims], cfg: SuiteConfig) -> List[ReportRecord]:
    out = []
    for m, tol in ((1, 1e-3), (2, 1e-2), (3, 1e-2)):
        for name, phi in standard_test_functions(m):
            b = cauchy_boundary_check(m, phi)
            out.append(numeric_record("boundary", f"cauchy m={m} {name}", b.limit, b.target, _tol(cfg, tol),
                                      absolute=True))
    for name, phi in standard_test_functions(3):
        b = polyharmonic_jump(3, phi, 0)
        out.append(numeric_record("boundary", f"nu_2 jump m=3 {name}", b.limit, 0.0, _tol(cfg, 1e-3), absolute=True))
        b = higher_cauchy_jump(3, phi, 1)
        out.append(numeric_record("boundary", f"exploratory phi_3 jump m=3 {name}", b.limit, 0.0, _tol(cfg, 1e-3),
                                  absolute=True))
    return out


def suite_appendix(dims: Optional[Dims], cfg: SuiteConfig) -> List[ReportRecord]:
    out = []
    for j in range(9):
        out.append(exact_record("appendix", f"layer moment j={j}", layer_moment(j), Fraction(1, 2) if j == 0 else 0))
    for j in range(1, 9):
        out.append(exact_record("appendix", f"log layer moment j={j}", log_layer_moment(j),
                                Fraction(math.factorial(j - 1), 4)))
    for ell in range(11):
        out.append(exact_record("appendix", f"a_{ell} recursion vs harmonic", log_primitive_coeff(ell),
                                harmonic_number(ell) / math.factorial(ell)))
    pts = np.array([0.3, 0.8, 1.7, 3.2])
    h = 1e-4
    for ell in range(6):
        num = (log_primitive_eval(ell + 1, pts + h) - log_primitive_eval(ell + 1, pts - h)) / (2 * h)
        ref = log_primitive_eval(ell, pts)
        err = float(np.max(np.abs(num - ref)))
        tol = _tol(cfg, 1e-6)
        out.append(ReportRecord("appendix", f"G_{ell + 1}' = G_{ell}", "pass" if err <= tol else "fail",
                                [float(v) for v in num], [float(v) for v in ref], err,
                                err / float(np.max(np.abs(ref))), tol))
    return out


# ---------------------------------------------------------------------------
# registry and runner

@dataclass(frozen=True)
class Suite:
    fn: Callable
    default_dims: Optional[Tuple[Dims, ...]] = None     # None: not parameterized by dimensions


SUITES: Dict[str, Suite] = {
    "sl2": Suite(suite_sl2, tuple(ALGEBRA_DIMS)),
    "dirac": Suite(suite_dirac, tuple(ALGEBRA_DIMS)),
    "lappowx": Suite(suite_lappowx, tuple(ALGEBRA_DIMS)),
    "sigma": Suite(suite_sigma),
    "pizzetti": Suite(suite_pizzetti, tuple(PIZZETTI_DIMS)),
    "funk_hecke": Suite(suite_funk_hecke, tuple(FUNK_HECKE_DIMS)),
    "techlem": Suite(suite_techlem),
    "fundsol": Suite(suite_fundsol, tuple(FUNDSOL_DIMS)),
    "central_slice": Suite(suite_central_slice, tuple(CENTRAL_SLICE_DIMS)),
    "invert": Suite(suite_invert, tuple(INVERSION_DIMS)),
    "fermionic": Suite(suite_fermionic, (Dims(0, 1), Dims(0, 2))),
    "backprojection": Suite(suite_backprojection, tuple(BACKPROJECTION_DIMS)),
    "plane_waves": Suite(suite_planewave),
    "boundary": Suite(suite_boundary),
    "appendix": Suite(suite_appendix),
}

GROUPS: Dict[str, Tuple[str, ...]] = {
    "algebra": ("sl2", "dirac", "lappowx", "sigma"),
    "operators": ("sl2", "dirac", "lappowx"),
    "distributions": ("techlem", "fundsol", "appendix"),
    "sphere": ("sigma", "pizzetti", "funk_hecke"),
    "radon": ("central_slice", "invert", "fermionic", "backprojection"),
    "planewave": ("plane_waves", "boundary", "appendix"),
}
GROUPS["all"] = tuple(SUITES)


def resolve_suites(names: Sequence[str]) -> List[str]:
    """Expand group names, keep first occurrence order, reject unknown ids."""
    out: List[str] = []
    for name in names:
        if name in SUITES:
            members = (name,)
        elif name in GROUPS:
            members = GROUPS[name]
        else:
            raise KeyError(name)
        for m in members:
            if m not in out:
                out.append(m)
    return out


def _run_job(job) -> List[ReportRecord]:
    name, dims, cfg = job
    start = time.perf_counter()
    records = SUITES[name].fn(dims, cfg)
    elapsed = (time.perf_counter() - start) / max(len(records), 1)
    for r in records:
        r.wall_time = elapsed
    return records


def plan_jobs(names: Sequence[str], dims: Optional[Sequence[Dims]], cfg: SuiteConfig):
    jobs = []
    for name in resolve_suites(names):
        suite = SUITES[name]
        if suite.default_dims is None:
            jobs.append((name, None, cfg))
        else:
            for d in (dims or suite.default_dims):
                jobs.append((name, d, cfg))
    return jobs


def run_suites(names: Sequence[str], dims: Optional[Sequence[Dims]] = None, cfg: SuiteConfig = SuiteConfig(),
               workers: int = 1) -> List[ReportRecord]:
    """Run suites (over ``dims`` when given, else their defaults); output order follows the job plan."""
    jobs = plan_jobs(names, dims, cfg)
    if workers <= 1 or len(jobs) <= 1:
        batches = [_run_job(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_run_job, jobs))
    return [r for batch in batches for r in batch]


__all__ = [
    "GROUPS", "ReportRecord", "SUITES", "Suite", "SuiteConfig", "count_record", "evaluation_points", "exact_record",
    "fermionic_basis", "monomials", "numeric_record", "plan_jobs", "random_polynomial", "random_rationals",
    "resolve_suites", "run_suites", "sample_superfunction", "unsupported_record",
]
