"""Bosonic plane-wave identities in weak form and the boundary values behind them.

Each identity integrates a homogeneous kernel g(<x, w>) over directions and
pairs it with a Gaussian-class test function.  The pairing is taken slice by
slice, int g(<x, w>) phi(x) dx = int g(p) R[phi](w, p) dp, so only 1-D
regularized pairings and a sphere quadrature are needed.  The right-hand
sides are radial pairings with |x|^lam or values of Laplacians at the origin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import integrate, special

from .algebra.compose import DomainError
from .algebra.gamma import falling, falling_derivative
from .distributions.kernel1d import Kernel1D, pair_kernel_1d
from .radon.backprojection import _laplacian_power
from .radon.gaussian import GaussianSuperFunction
from .radon.transform import radon_transform
from .sphere.quadrature import SphereQuadrature, sphere_area_float, sphere_quadrature

IDENTITIES = ("PWRLan", "PrincEven", "PrincOdd", "PWDelRm_even", "PWDelRm_odd")
DEFAULT_X0 = (0.2, 0.1, 0.05)


@dataclass(frozen=True)
class PlaneWaveIdentityCase:
    """One identity: ``lam`` is used by PWRLan, ``ell`` by the principal-value families."""

    identity: str
    m: int
    lam: object = None
    ell: int = 0

    def __post_init__(self):
        if self.identity not in IDENTITIES:
            raise ValueError(f"unknown identity {self.identity!r}")
        if self.m < 1:
            raise ValueError("dimension must be positive")
        even = self.identity in ("PrincEven", "PWDelRm_even")
        odd = self.identity in ("PrincOdd", "PWDelRm_odd")
        if (even and self.m % 2) or (odd and self.m % 2 == 0):
            raise ValueError(f"{self.identity} needs m of the other parity")
        if self.identity == "PWRLan" and self.lam is None:
            raise ValueError("PWRLan needs lam")


@dataclass
class IdentityResult:
    case: PlaneWaveIdentityCase
    lhs: float
    rhs: float

    @property
    def abs_err(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def rel_err(self) -> float:
        return self.abs_err / abs(self.rhs) if self.rhs else self.abs_err


def directional_pairing(kernel: Kernel1D, phi: GaussianSuperFunction, quad: Optional[SphereQuadrature] = None,
                        tol: float = 1e-12) -> float:
    """int_S <g(p), R[phi](w, p)> dS_w for a bosonic phi."""
    if phi.dims.n or phi.nparam:
        raise ValueError("plane-wave identities are bosonic")
    quad = quad or sphere_quadrature(phi.dims.m)
    prof = radon_transform(phi).profiles(quad.nodes)[0]
    vals = pair_kernel_1d(kernel, prof, tol=tol)
    return float(quad.integrate(np.asarray(vals)))


def spherical_mean(phi: GaussianSuperFunction, quad: SphereQuadrature) -> Callable[[float], float]:
    """rho -> int_S phi(rho w) dS_w."""
    def fn(rho):
        pts = [rho * quad.nodes[:, i] for i in range(quad.m)]
        return float(quad.integrate(phi.component_values(pts)[0]))
    return fn


def radial_power_pairing(phi: GaussianSuperFunction, lam, quad: Optional[SphereQuadrature] = None,
                         tol: float = 1e-12) -> float:
    """<|x|^lam, phi> for lam > -m by polar quadrature."""
    m = phi.dims.m
    lamf = float(lam)
    if lamf <= -m:
        raise DomainError(f"|x|^{lam} is not locally integrable in dimension {m}")
    quad = quad or sphere_quadrature(m, 32)
    mean = spherical_mean(phi, quad)
    reach = float(np.linalg.norm(phi.center_array)) + 14.0
    val, _ = integrate.quad(lambda r: r ** (lamf + m - 1) * mean(r), 0.0, reach, epsabs=tol, epsrel=tol, limit=400)
    return val


def laplacian_at_origin(phi: GaussianSuperFunction, ell: int) -> float:
    return float(_laplacian_power(phi, ell).value_at((0.0,) * phi.dims.m).body())


def verify_pw_identity(case: PlaneWaveIdentityCase, phi: GaussianSuperFunction,
                       quad: Optional[SphereQuadrature] = None) -> IdentityResult:
    m = case.m
    if phi.dims.m != m:
        raise ValueError("test function dimension differs from the case")
    half = (m - 1) / 2
    if case.identity == "PWRLan":
        lam = float(case.lam)
        lhs = directional_pairing(Kernel1D("abs_pow", case.lam), phi, quad)
        lhs *= special.rgamma((lam + 1) / 2) / math.pi ** half
        rhs = 2 * special.rgamma((lam + m) / 2) * radial_power_pairing(phi, case.lam)
    elif case.identity in ("PrincEven", "PWDelRm_even"):
        ell = case.ell if case.identity == "PrincEven" else 0
        power = -m - 2 * ell
        pairing = directional_pairing(Kernel1D("abs_pow", power), phi, quad)
        if case.identity == "PrincEven":
            lhs = pairing * special.rgamma((1 - m) / 2 - ell) / math.pi ** half
            rhs = (-1) ** ell * 2 * math.pi ** (m / 2) * laplacian_at_origin(phi, ell) \
                / (4 ** ell * math.gamma(m / 2 + ell))
        else:
            lhs = pairing * (-1) ** (m // 2) * math.factorial(m - 1) / (2 * math.pi) ** m
            rhs = laplacian_at_origin(phi, 0)
    else:
        ell = case.ell if case.identity == "PrincOdd" else 0
        order = m - 1 + 2 * ell
        pairing = directional_pairing(Kernel1D("delta_derivative", order=order), phi, quad)
        if case.identity == "PrincOdd":
            j = (m - 1) // 2 + ell
            lhs = pairing * (-1) ** ((m - 1) // 2) * math.factorial(j) / (math.pi ** half * math.factorial(order))
            rhs = 2 * math.pi ** (m / 2) * laplacian_at_origin(phi, ell) / (4 ** ell * math.gamma(m / 2 + ell))
        else:
            lhs = pairing * (-1) ** ((m - 1) // 2) / (2 * (2 * math.pi) ** (m - 1))
            rhs = laplacian_at_origin(phi, 0)
    return IdentityResult(case, float(lhs), float(rhs))


# ---------------------------------------------------------------------------
# boundary values in the upper half space R^(m+1)

def richardson(h: Sequence[float], values: Sequence[float]) -> float:
    """Value at h = 0 of the polynomial through (h_i, values_i) (Neville)."""
    h = list(map(float, h))
    t = list(map(float, values))
    n = len(t)
    for k in range(1, n):
        for i in range(n - k):
            t[i] = (h[i + k] * t[i] - h[i] * t[i + 1]) / (h[i + k] - h[i])
    return t[0]


@dataclass
class BoundaryValue:
    x0: List[float]
    values: List[float]
    limit: float
    target: float = 0.0
    exploratory: bool = False

    @property
    def abs_err(self) -> float:
        return abs(self.limit - self.target)


def _radial_kernel_pairing(phi: GaussianSuperFunction, kernel: Callable[[float], float], peak: float,
                           quad: SphereQuadrature, tol: float = 1e-12) -> float:
    """int_0^inf rho^(m-1) kernel(rho) int_S phi(rho w) dS_w d rho."""
    m = phi.dims.m
    mean = spherical_mean(phi, quad)
    reach = float(np.linalg.norm(phi.center_array)) + 14.0
    f = lambda r: r ** (m - 1) * kernel(r) * mean(r)
    cuts = sorted({0.0, min(peak, reach), min(10 * peak, reach), reach})
    total = 0.0
    for a, b in zip(cuts[:-1], cuts[1:]):
        if b > a:
            total += integrate.quad(f, a, b, epsabs=tol, epsrel=tol, limit=400)[0]
    return total


def cauchy_scalar_jump(phi: GaussianSuperFunction, x0: float, quad: Optional[SphereQuadrature] = None) -> float:
    """Scalar part of <phi_1(x0, .) - phi_1(-x0, .), phi> for the Cauchy kernel of R^(m+1).

    phi_1(x0, x) = -(x0 - x) / (sigma_(m+1) |x0 - x|^(m+1)); the vector parts
    cancel in the jump and the scalar part is minus the Poisson kernel.
    """
    m = phi.dims.m
    quad = quad or sphere_quadrature(m, 32)
    s = sphere_area_float(m + 1)
    kernel = lambda r: -2 * x0 / (s * (x0 * x0 + r * r) ** ((m + 1) / 2))
    return _radial_kernel_pairing(phi, kernel, x0, quad)


def cauchy_boundary_check(m: int, phi: GaussianSuperFunction, x0s: Sequence[float] = DEFAULT_X0,
                          quad: Optional[SphereQuadrature] = None) -> BoundaryValue:
    """Richardson limit x0 -> 0+ of the Cauchy-kernel jump; the target is -phi(0)."""
    if m not in (1, 2, 3) or phi.dims.m != m or phi.dims.n:
        raise ValueError("the boundary check is bosonic with m in {1, 2, 3}")
    vals = [cauchy_scalar_jump(phi, h, quad) for h in x0s]
    target = -laplacian_at_origin(phi, 0)
    return BoundaryValue(list(x0s), vals, richardson(x0s, vals), target)


def polyharmonic_constant(dim: int, j: int) -> float:
    """c(dim, j) = (-1)^j Gamma(dim/2 - j) / (2^(2j) pi^(dim/2) Gamma(j))."""
    return (-1) ** j * math.gamma(dim / 2 - j) / (4 ** j * math.pi ** (dim / 2) * math.gamma(j))


def polyharmonic_jump(m: int, phi: GaussianSuperFunction, j: int = 0, x0s: Sequence[float] = DEFAULT_X0,
                      quad: Optional[SphereQuadrature] = None) -> BoundaryValue:
    """Jump of nu_(2j+2) = c(m+1, j+1) |x0 + x|^(2j-m+1); both sides are integrated separately."""
    quad = quad or sphere_quadrature(m, 32)
    c = polyharmonic_constant(m + 1, j + 1)
    e = (2 * j - m + 1) / 2
    vals = []
    for h in x0s:
        up = _radial_kernel_pairing(phi, lambda r: c * (h * h + r * r) ** e, h, quad)
        down = _radial_kernel_pairing(phi, lambda r: c * ((-h) ** 2 + r * r) ** e, h, quad)
        vals.append(up - down)
    return BoundaryValue(list(x0s), vals, richardson(x0s, vals), 0.0)


def higher_cauchy_constant(dim: int, j: int) -> float:
    """d(dim, j) = (-1)^(j+1) Gamma(dim/2 - j) / (2^(2j+1) pi^(dim/2) Gamma(j+1))."""
    return (-1) ** (j + 1) * math.gamma(dim / 2 - j) / (2 ** (2 * j + 1) * math.pi ** (dim / 2) * math.gamma(j + 1))


def higher_cauchy_jump(m: int, phi: GaussianSuperFunction, j: int = 1, x0s: Sequence[float] = DEFAULT_X0,
                       quad: Optional[SphereQuadrature] = None) -> BoundaryValue:
    """Scalar jump 2 d(m+1, j) x0 int phi / |x0 + x|^(m+1-2j); only j = 1, m = 3 is exercised."""
    quad = quad or sphere_quadrature(m, 32)
    d = higher_cauchy_constant(m + 1, j)
    e = (m + 1 - 2 * j) / 2
    vals = [_radial_kernel_pairing(phi, lambda r: 2 * d * h / (h * h + r * r) ** e, h, quad) for h in x0s]
    return BoundaryValue(list(x0s), vals, richardson(x0s, vals), 0.0, exploratory=True)


# ---------------------------------------------------------------------------
# radial layer integrals

def layer_moment(j: int) -> Fraction:
    """int_0^inf delta^(j)(1 - r^2) r^(2j-1) dr = 1/2 d^j/dt^j [t^(j-1)] at t = 1."""
    return Fraction(1, 2) * falling(j - 1, j)


def log_layer_moment(j: int) -> Fraction:
    """int_0^inf delta^(j)(1 - r^2) ln(r) r^(2j-1) dr = 1/4 d^j/dt^j [t^(j-1) ln t] at t = 1."""
    return Fraction(1, 4) * falling_derivative(j - 1, j)


def standard_test_functions(m: int) -> List[Tuple[str, GaussianSuperFunction]]:
    """Gaussian, x_1^2 Gaussian and a shifted Gaussian in R^m."""
    from .algebra.dims import Dims
    from .algebra.superpoly import SuperPolynomial
    d = Dims(m, 0)
    x1 = SuperPolynomial.bosonic(d, 1)
    shift = tuple([0.3] + [-0.2] * (m - 1))
    return [
        ("gaussian", GaussianSuperFunction.gaussian(d)),
        ("x1^2 gaussian", GaussianSuperFunction.from_polynomial(x1 * x1)),
        ("shifted gaussian", GaussianSuperFunction.gaussian(d, shift)),
    ]


__all__ = [
    "BoundaryValue", "DEFAULT_X0", "IDENTITIES", "IdentityResult", "PlaneWaveIdentityCase", "cauchy_boundary_check",
    "cauchy_scalar_jump", "directional_pairing", "higher_cauchy_constant", "higher_cauchy_jump",
    "laplacian_at_origin", "layer_moment", "log_layer_moment", "polyharmonic_constant", "polyharmonic_jump",
    "radial_power_pairing", "richardson", "spherical_mean", "standard_test_functions", "verify_pw_identity",
]
