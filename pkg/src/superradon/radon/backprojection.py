"""Backprojection identities: R*R[phi] against a convolution with the inverse super distance.

R*R[phi](x) = 2 pi^((M-1)/2) int [|y - x|^lam / Gamma((M + lam)/2)]_(lam=-1) phi(y),
which is 2^M pi^(M-1) (K^M_(M-1) * phi)(x) with the Riesz kernel K.  When
M - 1 lies in -2N_0 the bracket is a finite sum of Laplacians of the delta
distribution; otherwise it is |y - x|^-1 expanded in powers of the fermionic
square, convolved by polar quadrature around x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy import integrate

from ..algebra.gamma import sphere_area
from ..algebra.grassmann import GrassmannElement, berezin
from ..distributions.superkernels import (UnsupportedCase, normalized_power_at_pole, riesz_kernel,
                                          super_power)
from ..sphere.quadrature import SphereQuadrature, sphere_quadrature
from .dual import dual_radon
from .gaussian import GaussianSuperFunction
from .transform import radon_transform

CONVOLUTION_DEGREE = 48
RADIAL_TOL = 1e-10


def _on_delta_set(M: int) -> bool:
    return M - 1 <= 0 and (M - 1) % 2 == 0


def _fermionic_square_power(n: int, ngen: int, j: int) -> GrassmannElement:
    sq = GrassmannElement(ngen)
    for i in range(n):
        sq = sq + GrassmannElement(ngen, {(1 << 2 * i) | (1 << (2 * i + 1)): 1})
    return sq ** j


def _berezin_weights(phi: GaussianSuperFunction, j: int) -> Dict[int, GrassmannElement]:
    """For each component A: int_B (y`^2)^j e_A over y`, an element over the parameters."""
    n, ngen = phi.dims.n, phi.ngen
    sq = _fermionic_square_power(n, ngen, j)
    out = {}
    for A in phi.components:
        e = sq * GrassmannElement(ngen, {A: 1})
        if n == 0:
            out[A] = e
            continue
        b = berezin(e, 1, 2 * n, exact=False)
        out[A] = b if isinstance(b, GrassmannElement) else GrassmannElement.one(0, b)
    return out


def _laplacian_power(phi: GaussianSuperFunction, k: int) -> GaussianSuperFunction:
    for _ in range(k):
        acc = None
        for j in range(1, phi.dims.m + 1):
            t = phi.d_bosonic(j).d_bosonic(j)
            acc = t if acc is None else acc + t
        phi = acc
    return phi


def delta_pairing(phi: GaussianSuperFunction, x: Sequence[float]) -> GrassmannElement:
    """int [|y - x|^lam / Gamma((M + lam)/2)]_(lam=-1) phi(y) when M - 1 lies in -2N_0."""
    dims = phi.dims
    ell = (1 - dims.M) // 2
    expansion = normalized_power_at_pole(dims, ell)
    total = GrassmannElement(phi.nparam)
    for sq_power, lap_order, coeff in expansion.terms():
        weights = _berezin_weights(phi, sq_power)
        vals = _laplacian_power(phi, lap_order).value_at(x)
        for A, w in weights.items():
            total = total + w.map(lambda c, v=vals.coefficient(A): c * v * float(coeff))
    return total


def inverse_distance_pairing(phi: GaussianSuperFunction, x: Sequence[float], degree: int = CONVOLUTION_DEGREE,
                             tol: float = RADIAL_TOL, coeffs=None) -> GrassmannElement:
    """int sum_j c_j (y`^2)^j |y_b - x|^(-1-2j) phi(y) by Berezin weights and polar quadrature.

    ``coeffs`` defaults to the expansion of the super power |y - x|^-1.
    """
    dims = phi.dims
    m, n = dims.m, dims.n
    if coeffs is None:
        coeffs = super_power(dims, -1).coeffs
    x = np.asarray(x, dtype=float)
    quad = sphere_quadrature(m, degree)
    masks = sorted(phi.components)
    reach = float(np.linalg.norm(x - phi.center_array)) + 14.0
    total = GrassmannElement(phi.nparam)
    for j, c in enumerate(coeffs):
        if c == 0:
            continue
        if m - 1 - 2 * j <= 0:
            raise UnsupportedCase(f"|y|^({-1 - 2 * j}) is not locally integrable in dimension {m}")
        expo = m - 2 - 2 * j

        def radial(rho):
            pts = [x[i] + rho * quad.nodes[:, i] for i in range(m)]
            vals = phi.component_values(pts)
            return rho ** expo * np.array([quad.integrate(vals[A]) for A in masks])

        bos, _ = integrate.quad_vec(radial, 0.0, reach, epsabs=tol, epsrel=tol, limit=400)
        weights = _berezin_weights(phi, j)
        for A, v in zip(masks, bos):
            total = total + weights[A].map(lambda w, v=v: w * float(v) * float(c))
    return total


@dataclass
class BackprojectionPair:
    x: List[float]
    lhs: GrassmannElement
    rhs: GrassmannElement

    def errors(self):
        from .inversion import grassmann_error
        return grassmann_error(self.lhs, self.rhs)


def _as_element(v, ngen):
    return v if isinstance(v, GrassmannElement) else GrassmannElement(ngen, {0: float(v)})


def backprojection_rhs(phi: GaussianSuperFunction, x: Sequence[float], degree: int = CONVOLUTION_DEGREE
                       ) -> GrassmannElement:
    """2^M pi^(M-1) (K^M_(M-1) * phi)(x)."""
    dims = phi.dims
    M = dims.M
    if dims.m == 0:
        raise UnsupportedCase("the backprojection identity needs m >= 1")
    if _on_delta_set(M):
        return delta_pairing(phi, x).map(lambda c: c * 2 * math.pi ** ((M - 1) / 2))
    K = riesz_kernel(dims, M - 1)
    scale = 2.0 ** M * math.pi ** (M - 1)
    coeffs = [float(c) * scale for c in K.expansion.coeffs]
    return inverse_distance_pairing(phi, x, degree, coeffs=coeffs)


def backprojection_identity(phi: GaussianSuperFunction, points: Sequence[Sequence[float]],
                            quad: Optional[SphereQuadrature] = None, degree: int = CONVOLUTION_DEGREE
                            ) -> List[BackprojectionPair]:
    """(R*R[phi](x), 2^M pi^(M-1) (K * phi)(x)) at bosonic points."""
    data = radon_transform(phi)
    out = []
    for x in points:
        lhs = _as_element(dual_radon(data, tuple(x), quad), phi.nparam)
        out.append(BackprojectionPair(list(map(float, x)), lhs, backprojection_rhs(phi, x, degree)))
    return out


def pwrk_weak_check(phi: GaussianSuperFunction, quad: Optional[SphereQuadrature] = None,
                    degree: int = CONVOLUTION_DEGREE):
    """(int_S R[phi](w, 0) dS_w, <sigma_(M-1) |x|^-1, phi>) as Grassmann elements.

    sigma_(M-1)|x|^-1 is the normalized power 2 pi^((M-1)/2) [|x|^lam / Gamma((M+lam)/2)]_(lam=-1);
    off the delta set this is the plain area constant times the super power |x|^-1.
    """
    dims = phi.dims
    origin = (0.0,) * dims.m
    lhs = _as_element(dual_radon(radon_transform(phi), origin, quad), phi.nparam)
    M = dims.M
    if _on_delta_set(M):
        rhs = delta_pairing(phi, origin).map(lambda c: c * 2 * math.pi ** ((M - 1) / 2))
    else:
        sigma = float(sphere_area(M - 1))
        rhs = inverse_distance_pairing(phi, origin, degree).map(lambda c: c * sigma)
    return lhs, rhs


__all__ = ["BackprojectionPair", "backprojection_identity", "backprojection_rhs", "delta_pairing",
           "inverse_distance_pairing", "pwrk_weak_check"]
