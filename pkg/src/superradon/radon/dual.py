"""Dual Radon transform R*[psi](x) = int_{S} psi(w, <x, w>) dS_w on the supersphere.

The sphere integral runs through the delta route.  Off the unit sphere the
integrand is extended by homogeneity: if psi(h w, h p) = h^d psi(w, p) with
w` scaling like w, the coefficient of a w`-monomial of size s is homogeneous
of degree d - s in the bosonic w, which turns every radial layer into an
exact falling-factorial multiple of the node values.

Fermionic evaluation points are symbolic: y` is appended as extra Grassmann
generators after [w`][parameters], and psi(w, <y_b, w> + <y`, w`>) is
expanded in powers of the nilpotent part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence, Tuple

import numpy as np

from ..algebra.dims import Dims
from ..algebra.gamma import falling
from ..algebra.grassmann import GrassmannElement
from ..sphere.integrals import HomogeneousComponent, SphereIntegrand, supersphere_integral
from ..sphere.quadrature import SphereQuadrature, sphere_quadrature
from .transform import RadonData, shift_expansion


@dataclass(frozen=True)
class SupervectorPoint:
    """Evaluation point y = y_b + y`: a bosonic vector plus an optional symbolic fermionic part.

    With ``symbolic`` set, the fermionic coordinates y`_1..y`_2n become extra
    Grassmann generators placed after all others.
    """

    bosonic: Tuple[float, ...]
    symbolic: bool = False

    @classmethod
    def of(cls, y, symbolic: bool = False) -> "SupervectorPoint":
        if isinstance(y, SupervectorPoint):
            return y
        return cls(tuple(float(v) for v in np.atleast_1d(y)), symbolic)

    @property
    def is_bosonic(self) -> bool:
        return not self.symbolic

    def array(self) -> np.ndarray:
        return np.array(self.bosonic, dtype=float)


def fermionic_pairing(n: int, ngen: int, w_offset: int, y_offset: int) -> GrassmannElement:
    """<y`, w`> = -1/2 sum (y`_a w`_b - y`_b w`_a) over generators at the given zero-based offsets."""
    out = GrassmannElement(ngen)
    for i in range(n):
        a, b = 2 * i, 2 * i + 1
        ya = GrassmannElement.generator(ngen, y_offset + a + 1)
        yb = GrassmannElement.generator(ngen, y_offset + b + 1)
        wa = GrassmannElement.generator(ngen, w_offset + a + 1)
        wb = GrassmannElement.generator(ngen, w_offset + b + 1)
        out = out + (ya * wb - yb * wa) * Fraction(-1, 2)
    return out


@dataclass(frozen=True)
class MonomialProfile:
    """psi(w, p) = p^k; homogeneous of degree k and free of w`."""

    dims: Dims
    k: int
    nparam: int = 0

    @property
    def ngen(self) -> int:
        return self.dims.nferm + self.nparam

    @property
    def homogeneity(self) -> int:
        return self.k

    def values(self, nodes, p, extra: int = 0) -> Dict[int, np.ndarray]:
        if extra > self.k:
            return {}
        c = float(falling(self.k, extra))
        return {0: c * np.asarray(p, dtype=float) ** (self.k - extra)}


def radon_values(data: RadonData, nodes, p, extra: int = 0) -> Dict[int, np.ndarray]:
    """Components of d_p^extra R at (node_i, p_i)."""
    p = np.asarray(p, dtype=float)
    return {B: np.asarray(f(p)) for B, f in data.profiles(nodes, extra).items()}


def _values(psi, nodes, p, extra):
    if isinstance(psi, RadonData):
        return radon_values(psi, nodes, p, extra)
    return psi.values(nodes, p, extra)


def shifted_layout(psi, x: SupervectorPoint):
    """(total generators, nilpotent shift or None) for psi evaluated at p = <x, w>."""
    n = psi.dims.n
    extra = 2 * n if (x.symbolic and n) else 0
    ngen = psi.ngen + extra
    nil = fermionic_pairing(n, ngen, 0, psi.ngen) if extra else None
    return ngen, nil


def expand_shift(psi, x: SupervectorPoint, evaluate) -> Tuple[int, Dict[int, object]]:
    """Collect sum_i nil^i / i! * evaluate(i)[B] e_B by components over [w`][params][y`].

    ``evaluate(i)`` returns {B: node values of the i-th p-derivative term}.
    """
    ngen, nil = shifted_layout(psi, x)
    expansion = shift_expansion(nil, psi.dims.nferm) if nil is not None else [(0, GrassmannElement.one(ngen))]
    acc: Dict[int, object] = {}
    for i, coeff in expansion:
        for B, v in evaluate(i).items():
            for C, c in (GrassmannElement(ngen, {B: 1.0}) * coeff).items():
                acc[C] = acc[C] + v * float(c) if C in acc else v * float(c)
    return ngen, acc


def homogeneous_integrand(dims: Dims, ngen: int, comps: Dict[int, object], degree,
                          log_comps: Dict[int, object] | None = None) -> SphereIntegrand:
    """Sphere integrand whose component C has bosonic degree ``degree`` - |C restricted to w`|."""
    nf = dims.nferm
    wmask = (1 << nf) - 1
    F = SphereIntegrand(dims, nparam=ngen - nf)
    log_comps = log_comps or {}
    for C, v in comps.items():
        F.add(C, HomogeneousComponent(np.asarray(v, dtype=float), degree - (C & wmask).bit_count(),
                                      None if C not in log_comps else np.asarray(log_comps[C], dtype=float)))
    return F


def dual_radon(psi, x, quad: SphereQuadrature | None = None):
    """R*[psi](x) for a RadonData or any profile family with ``values``/``homogeneity``.

    Returns a float, or a GrassmannElement over [parameters][y`] when either
    is present.
    """
    x = SupervectorPoint.of(x)
    dims = psi.dims
    if dims.m == 0:
        raise ValueError("the dual transform needs m >= 1")
    quad = quad or sphere_quadrature(dims.m)
    a0 = quad.nodes @ x.array()
    ngen, comps = expand_shift(psi, x, lambda i: _values(psi, quad.nodes, a0, i))
    F = homogeneous_integrand(dims, ngen, comps, psi.homogeneity)
    return supersphere_integral(F, quad)


def sphere_constant_check(dims: Dims, quad: SphereQuadrature | None = None) -> Tuple[float, float]:
    """(R*[1], sigma_M) as floats."""
    from ..algebra.gamma import sphere_area
    return float(dual_radon(MonomialProfile(dims, 0), (0.0,) * dims.m, quad)), float(sphere_area(dims.M))


def quadratic_check(dims: Dims, x: Sequence[float], quad: SphereQuadrature | None = None) -> Tuple[float, float]:
    """(R*[p^2](x), sigma_M |x|^2 / M) for bosonic x."""
    from ..algebra.gamma import sphere_area
    x = np.asarray(x, dtype=float)
    lhs = float(dual_radon(MonomialProfile(dims, 2), x, quad))
    return lhs, float(sphere_area(dims.M)) * float(x @ x) / dims.M


__all__ = ["MonomialProfile", "SupervectorPoint", "dual_radon", "expand_shift", "fermionic_pairing",
           "homogeneous_integrand", "quadratic_check", "radon_values", "shifted_layout", "sphere_constant_check"]
