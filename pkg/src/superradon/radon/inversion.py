"""Recovering phi(y) from its super Radon transform.

Three regimes by M = m - 2n:

* M >= 1 odd:   c_odd  * int_S d_p^(M-1) R(w, <y, w>) dS_w
* M >= 1 even:  c_even * int_S <p^-1, d_p^(M-1) R(w, p + <y, w>)> dS_w
* M = -2k:      c_k * int p^(2k) Delta_w^k R(w, p + <y, w>) dp
                - (-1)^k (4 pi^2)^k int_S int G_2k(|p|) R(w, p + <y, w>) dp dS_w

Odd negative M has no formula here and m = 0 goes through
``invert_fermionic``.  Every direction integral uses the homogeneous
extension of the integrand off the sphere; the inner p-pairing of the even
case has degree -M, the log-kernel pairing is log-homogeneous of degree 2k.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy import integrate

from .. import jet
from ..algebra.dims import Dims
from ..algebra.gamma import sphere_area
from ..algebra.grassmann import GrassmannElement, berezin, derivative_sign
from ..algebra.scalar import Scalar
from ..distributions.kernel1d import principal_value_inverse
from ..distributions.logprim import log_primitive_eval
from ..distributions.superkernels import UnsupportedCase
from ..sphere.integrals import supersphere_integral
from ..sphere.quadrature import SphereQuadrature, sphere_quadrature
from .dual import SupervectorPoint, dual_radon, expand_shift, fermionic_pairing, homogeneous_integrand
from .gaussian import GaussianSuperFunction
from .transform import RadonData, _shifted, radon_transform

PV_TOL = 1e-11
LOG_TOL = 1e-11
HERMITE_NODES = 64


def inversion_case(dims: Dims) -> str:
    """'odd', 'even', 'negative_even', 'fermionic' or 'unsupported'."""
    M = dims.M
    if dims.m == 0:
        return "fermionic"
    if M >= 1:
        return "odd" if M % 2 else "even"
    if M % 2 == 0:
        return "negative_even"
    return "unsupported"


def odd_prefactor(M: int) -> float:
    return (-1) ** ((M - 1) // 2) / (2 * (2 * math.pi) ** (M - 1))


def even_prefactor(M: int) -> float:
    return (-1) ** (M // 2) / (2 * math.pi) ** M


def laplacian_prefactor(k: int) -> Scalar:
    """1 / (2^(2k-1) (k!)^2 sigma_(1-2k)); equals -pi/2 at k = 1."""
    return (sphere_area(1 - 2 * k) * (Fraction(2) ** (2 * k - 1) * math.factorial(k) ** 2)).inverse()


def _result(value, ngen_out: int) -> GrassmannElement:
    if isinstance(value, GrassmannElement):
        return value
    return GrassmannElement(ngen_out, {0: float(value)})


# ---------------------------------------------------------------------------
# M >= 1

def invert_odd(data: RadonData, y: SupervectorPoint, quad: Optional[SphereQuadrature] = None):
    M = data.dims.M
    return _scale(dual_radon(data.derivative(M - 1), y, quad), odd_prefactor(M))


def _scale(value, c):
    if isinstance(value, GrassmannElement):
        return value.map(lambda v: v * c)
    return value * c


def _pv_pairings(profiles, tol: float):
    """<p^-1, f> for a list of batched PolyGaussian1D profiles at once."""
    if not profiles:
        return []
    n_der = 2 + 18
    derivs = []
    for f in profiles:
        g, row = f, []
        for _ in range(n_der):
            row.append(np.asarray(g(0.0)))
            g = g.derivative()
        derivs.append(row)

    def value(t):
        return np.stack([np.asarray(f(t)) for f in profiles])

    out = principal_value_inverse(value, tol=tol, deriv0=lambda j: np.stack([row[j] for row in derivs]))
    return list(np.atleast_2d(out))


def invert_even(data: RadonData, y: SupervectorPoint, quad: Optional[SphereQuadrature] = None,
                tol: float = PV_TOL):
    M = data.dims.M
    quad = quad or sphere_quadrature(data.dims.m)
    a0 = quad.nodes @ y.array()
    base = data.derivative(M - 1)

    def evaluate(i):
        prof = base.profiles(quad.nodes, extra=i)
        keys = sorted(prof)
        vals = _pv_pairings([_shifted(prof[B], a0) for B in keys], tol)
        return dict(zip(keys, vals))

    ngen, comps = expand_shift(data, y, evaluate)
    F = homogeneous_integrand(data.dims, ngen, comps, -M)
    return _scale(supersphere_integral(F, quad), even_prefactor(M))


# ---------------------------------------------------------------------------
# M = -2k

def _grassmann_derivative(comps: Dict[int, object], j: int) -> Dict[int, object]:
    """Left derivative d/d(generator j, one-based) of {mask: coefficient}."""
    bit = 1 << (j - 1)
    out: Dict[int, object] = {}
    for mask, c in comps.items():
        if mask & bit:
            out[mask ^ bit] = c * derivative_sign(mask, bit)
    return out


def _fermionic_laplacian(comps: Dict[int, object], n: int) -> Dict[int, object]:
    """-4 sum d/dw`_(2j-1) d/dw`_(2j) on the leading 2n generators."""
    out: Dict[int, object] = {}
    for j in range(1, n + 1):
        part = _grassmann_derivative(_grassmann_derivative(comps, 2 * j), 2 * j - 1)
        for mask, c in part.items():
            out[mask] = out[mask] + c * -4 if mask in out else c * -4
    return out


def _bosonic_laplacian_power(f: jet.Jet, i: int):
    """Delta_b^i f at the expansion point: sum over |beta| = i of i!/beta! d^(2 beta) f."""
    if i == 0:
        return f.value
    K = f.K
    total = 0.0
    for combo in itertools.combinations_with_replacement(range(K), i):
        beta = [0] * K
        for c in combo:
            beta[c] += 1
        mult = math.factorial(i) // math.prod(math.factorial(b) for b in beta)
        total = f.derivative([2 * b for b in beta]) * mult + total
    return total


@dataclass
class LaplacianTerm:
    """int p^2k Delta_w^k R(w, p + <y, w>) dp at one direction, split by w`-content."""

    value: GrassmannElement     # w`-free part, over [parameters][y`]
    residual: float             # largest w`-carrying coefficient (vanishes in exact arithmetic)
    direction: np.ndarray = field(default=None)


def laplacian_term(data: RadonData, y: SupervectorPoint, k: int, direction=None,
                   nodes: int = HERMITE_NODES) -> LaplacianTerm:
    dims = data.dims
    m, n = dims.m, dims.n
    w0 = np.zeros(m) if direction is None else np.asarray(direction, dtype=float)
    if direction is None:
        w0[0] = 1.0
    w0 = w0 / np.linalg.norm(w0)
    z, wt = np.polynomial.hermite_e.hermegauss(nodes)
    yb = y.array()
    center = float(np.dot(np.array([float(v) for v in data.center]), w0) - yb @ w0)
    pnodes = center + z
    wvars = jet.Jet.variables(list(w0), 2 * k)
    a0 = 0.0
    for wi, yi in zip(wvars, yb):
        a0 = wi * float(yi) + a0
    parg = a0 + pnodes

    def evaluate(i):
        return data.evaluate(wvars, parg, extra=i)

    ngen, comps = expand_shift(data, y, evaluate)
    total: Dict[int, np.ndarray] = {}
    lap_f = dict(comps)
    powers = [lap_f]
    for _ in range(k):
        powers.append(_fermionic_laplacian(powers[-1], n))
    for i in range(k + 1):
        for C, f in powers[k - i].items():
            v = np.asarray(_bosonic_laplacian_power(f, i)) * math.comb(k, i)
            total[C] = total[C] + v if C in total else v
    weight = wt * np.exp(0.5 * z * z) * pnodes ** (2 * k)
    nf = dims.nferm
    wmask = (1 << nf) - 1
    free, residual = {}, 0.0
    for C, v in total.items():
        val = float(np.dot(weight, v))
        if C & wmask:
            residual = max(residual, abs(val))
        else:
            free[C >> nf] = val
    return LaplacianTerm(GrassmannElement(ngen - nf, free), residual, w0)


def _log_pairings(profiles, ell: int, tol: float):
    """(int G_ell(|p|) f(p) dp, int |p|^ell f(p) dp / ell!) for batched profiles."""
    if not profiles:
        return [], []
    reach = max(float(np.max(np.abs(f.t0))) for f in profiles) + 14.0

    def integrand(t):
        t = max(t, 1e-300)
        g = log_primitive_eval(ell, t)
        return np.stack([g * (np.asarray(f(t)) + np.asarray(f(-t))) for f in profiles])

    val, _ = integrate.quad_vec(integrand, 0.0, reach, epsabs=tol, epsrel=tol, limit=400)
    moments = [np.asarray(f.moment(ell)) / math.factorial(ell) for f in profiles]
    return list(val), moments


def log_kernel_term(data: RadonData, y: SupervectorPoint, k: int, quad: Optional[SphereQuadrature] = None,
                    tol: float = LOG_TOL):
    """int_S int G_2k(|p|) R(w, p + <y, w>) dp dS_w."""
    quad = quad or sphere_quadrature(data.dims.m)
    a0 = quad.nodes @ y.array()
    logs: Dict[int, object] = {}

    def evaluate(i):
        prof = data.profiles(quad.nodes, extra=i)
        keys = sorted(prof)
        vals, moms = _log_pairings([_shifted(prof[B], a0) for B in keys], 2 * k, tol)
        logs[i] = dict(zip(keys, moms))
        return dict(zip(keys, vals))

    ngen, comps = expand_shift(data, y, evaluate)
    _, log_comps = expand_shift(data, y, lambda i: logs[i])
    F = homogeneous_integrand(data.dims, ngen, comps, 2 * k, log_comps)
    return supersphere_integral(F, quad)


@dataclass
class NegativeEvenParts:
    laplacian: GrassmannElement
    log_kernel: object
    prefactor: float
    residual: float
    k: int = 1

    @property
    def value(self):
        k = self.k
        second = _scale(self.log_kernel, -((-1) ** k) * (4 * math.pi ** 2) ** k)
        first = self.laplacian.map(lambda v: v * self.prefactor)
        return first + _result(second, first.ngen)


def invert_negative_even(data: RadonData, y: SupervectorPoint, quad: Optional[SphereQuadrature] = None,
                         direction=None) -> NegativeEvenParts:
    k = -data.dims.M // 2
    first = laplacian_term(data, y, k, direction)
    second = log_kernel_term(data, y, k, quad)
    return NegativeEvenParts(first.value, second, float(laplacian_prefactor(k)), first.residual, k)


def laplacian_moment_oracle(phi: GaussianSuperFunction, y: Sequence[float], k: int):
    """(2k)! int |x|^2k phi(x + y) over superspace, for bosonic y."""
    from ..algebra.superpoly import norm_squared, vector
    shifted = phi.translate([-float(v) for v in y])
    r2 = norm_squared(vector(phi.dims))
    out = shifted.multiply(r2 ** k).integral()
    return _scale(out, math.factorial(2 * k))


# ---------------------------------------------------------------------------
# drivers

def invert(data: RadonData, y, quad: Optional[SphereQuadrature] = None) -> GrassmannElement:
    """phi(y) recovered from R[phi]; a GrassmannElement over [parameters][y`]."""
    y = SupervectorPoint.of(y)
    case = inversion_case(data.dims)
    ngen_out = data.nparam + (data.dims.nferm if y.symbolic else 0)
    if case == "odd":
        out = invert_odd(data, y, quad)
    elif case == "even":
        out = invert_even(data, y, quad)
    elif case == "negative_even":
        out = invert_negative_even(data, y, quad).value
    elif case == "fermionic":
        raise UnsupportedCase("m = 0 has no Radon transform; use invert_fermionic")
    else:
        raise UnsupportedCase(f"no explicit inversion formula for odd negative M = {data.dims.M}")
    return _result(out, ngen_out)


def reference_value(phi: GaussianSuperFunction, y) -> GrassmannElement:
    """phi(y) in the layout produced by ``invert``: [parameters][y`], or [parameters] for bosonic y."""
    y = SupervectorPoint.of(y)
    vals = phi.value_at(y.bosonic)
    nf, npar = phi.dims.nferm, phi.nparam
    xmask = (1 << nf) - 1
    acc: Dict[int, float] = {}
    for A, c in vals.items():
        xpart, ppart = A & xmask, A >> nf
        if not y.symbolic:
            if xpart:
                continue
            acc[ppart] = acc.get(ppart, 0.0) + c
            continue
        # e_x e_p = (-1)^(|x| |p|) e_p e_x, then x` -> y`
        sign = -1 if (xpart.bit_count() * ppart.bit_count()) % 2 else 1
        key = ppart | (xpart << npar)
        acc[key] = acc.get(key, 0.0) + sign * c
    ngen = npar + (nf if y.symbolic else 0)
    return GrassmannElement(ngen, acc)


def grassmann_error(got: GrassmannElement, ref: GrassmannElement):
    """(max coefficient difference, same relative to the largest reference coefficient)."""
    masks = set(m for m, _ in got.items()) | set(m for m, _ in ref.items())
    diff = max((abs(complex(got.coefficient(m)) - complex(ref.coefficient(m))) for m in masks), default=0.0)
    scale = max((abs(complex(c)) for _, c in ref.items()), default=0.0)
    return diff, (diff / scale if scale else diff)


@dataclass
class InversionRecord:
    case: str
    dims: str
    y: List[float]
    recovered: Dict[str, float]
    reference: Dict[str, float]
    abs_err: float
    rel_err: float
    quadrature_budget: Dict[str, int]
    wall_time: Optional[float] = None

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def _coeff_map(el: GrassmannElement) -> Dict[str, float]:
    return {str(m): float(np.real(c)) for m, c in sorted(el.items())}


def _invert_one(args):
    phi, y, degree = args
    quad = sphere_quadrature(phi.dims.m, degree)
    start = time.perf_counter()
    got = invert(radon_transform(phi), y, quad)
    elapsed = time.perf_counter() - start
    ref = reference_value(phi, y)
    a, r = grassmann_error(got, ref)
    return InversionRecord(inversion_case(phi.dims), f"{phi.dims.m},{phi.dims.n}", list(SupervectorPoint.of(y).bosonic),
                           _coeff_map(got), _coeff_map(ref), a, r, {"sphere_degree": degree, "sphere_nodes": quad.size},
                           elapsed)


def inversion_report(phi: GaussianSuperFunction, points: Sequence, degree: int = 24, workers: int = 1
                     ) -> List[InversionRecord]:
    """Invert at every point; the pool keeps input order, so output is deterministic."""
    jobs = [(phi, p, degree) for p in points]
    if workers <= 1 or len(jobs) <= 1:
        return [_invert_one(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_invert_one, jobs))


# ---------------------------------------------------------------------------
# m = 0

@dataclass
class FermionicInversion:
    value: GrassmannElement              # phi(y`) over the y` generators
    prefactor: Scalar
    laplacian_part: GrassmannElement     # Delta_w`^n int_B <x` - y`, w`>^2n phi(x`)


def invert_fermionic(phi: GrassmannElement, n: int) -> FermionicInversion:
    """Exact recovery of a Grassmann-only phi(x`) on 2n generators at a symbolic point y`."""
    nf = 2 * n
    if phi.ngen != nf:
        raise ValueError(f"expected an element on {nf} generators, got {phi.ngen}")
    if n == 0:
        raise ValueError("fermionic inversion needs n >= 1")
    ngen = 3 * nf  # [x`][w`][y`]
    pair = fermionic_pairing(n, ngen, nf, 0) - fermionic_pairing(n, ngen, nf, 2 * nf)
    e = pair ** nf * phi.embed(ngen, 0)
    rest = berezin(e, 1, nf, exact=True)
    comps = dict(rest.items())
    for _ in range(n):
        comps = _fermionic_laplacian(comps, n)
    wmask = (1 << nf) - 1
    lap = GrassmannElement(nf, {C >> nf: c for C, c in comps.items() if not C & wmask})
    if any(C & wmask for C, c in comps.items() if c != 0):
        raise ArithmeticError("w`-dependence survived the fermionic Laplacian")
    pref = laplacian_prefactor(n)
    return FermionicInversion(lap.map(lambda c: c * pref), pref, lap)


__all__ = [
    "FermionicInversion", "InversionRecord", "LaplacianTerm", "NegativeEvenParts", "even_prefactor",
    "grassmann_error", "invert", "invert_even", "invert_fermionic", "invert_negative_even", "invert_odd",
    "inversion_case", "inversion_report", "laplacian_moment_oracle", "laplacian_prefactor", "laplacian_term",
    "log_kernel_term", "odd_prefactor", "reference_value",
]
