"""Gaussian-class superfunctions sum_A P_A(x - c) exp(-|x - c|^2 / 2) e_A.

Component polynomials are stored in centred coordinates u = x - c, so
translations only move the centre.  Masks run over the generators
[x` (2n)][parameters]; parameters are extra Grassmann generators that ride
along unchanged (symbolic coefficients).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .. import jet
from ..algebra.dims import Dims
from ..algebra.grassmann import GrassmannElement, berezin, merge_sign
from ..algebra.superpoly import SuperPolynomial


@lru_cache(maxsize=None)
def hermite_coeffs(n: int) -> Tuple[int, ...]:
    """Power-basis coefficients of the probabilists' Hermite polynomial He_n."""
    if n == 0:
        return (1,)
    prev, cur = [1], [0, 1]
    for k in range(1, n):
        nxt = [0] * (k + 2)
        for i, c in enumerate(cur):
            nxt[i + 1] += c
        for i, c in enumerate(prev):
            nxt[i] -= k * c
        prev, cur = cur, nxt
    return tuple(cur)


def hermite_values(n_max: int, z) -> List:
    """[He_0(z), ..., He_n_max(z)] by the three-term recurrence (arrays or jets)."""
    out = [z * 0.0 + 1.0, z]
    for k in range(1, n_max):
        out.append(z * out[k] - out[k - 1] * k)
    return out[:n_max + 1]


def gaussian_moment(i: int) -> int:
    """E[Z^i] for standard normal Z."""
    return 0 if i % 2 else math.prod(range(i - 1, 0, -2))


def _shift_polynomial(P: SuperPolynomial, c: Sequence) -> SuperPolynomial:
    """Bosonic P(x) rewritten in u = x - c, i.e. P(u + c)."""
    dims = P.dims
    out = SuperPolynomial.zero(dims)
    lin = [SuperPolynomial.bosonic(dims, i + 1) + c[i] for i in range(dims.m)]
    for (a, mask), coeff in P.items():
        term = SuperPolynomial.monomial(dims, (0,) * dims.m, mask, coeff)
        for i, e in enumerate(a):
            if e:
                term = term * lin[i] ** e
        out = out + term
    return out


def _eval_bosonic(P: SuperPolynomial, coords):
    total = 0.0
    for (a, _), c in P.items():
        term = float(c)
        for x, e in zip(coords, a):
            if e:
                term = term * x ** e
        total = term + total
    return total


@dataclass(frozen=True)
class GaussianSuperFunction:
    dims: Dims
    center: Tuple
    components: Dict[int, SuperPolynomial] = field(default_factory=dict)
    nparam: int = 0

    # construction ----------------------------------------------------------
    @classmethod
    def from_polynomial(cls, P: SuperPolynomial, center: Sequence | None = None, nparam: int = 0
                        ) -> "GaussianSuperFunction":
        """P(x) exp(-|x - c|^2 / 2) for a superpolynomial P over the dims."""
        dims = P.dims
        c = tuple(center) if center is not None else (0,) * dims.m
        if len(c) != dims.m:
            raise ValueError("centre has the wrong length")
        bos = Dims(dims.m, 0)
        comps = {}
        for mask in sorted(P.masks()):
            part = P.fermionic_part(mask).restrict(range(dims.m), [], bos)
            shifted = _shift_polynomial(part, c)
            if not shifted.is_zero():
                comps[mask] = shifted
        return cls(dims, c, comps, nparam)

    @classmethod
    def gaussian(cls, dims: Dims, center: Sequence | None = None) -> "GaussianSuperFunction":
        return cls.from_polynomial(SuperPolynomial.constant(dims), center)

    @property
    def ngen(self) -> int:
        return self.dims.nferm + self.nparam

    @property
    def center_array(self) -> np.ndarray:
        return np.array([float(v) for v in self.center])

    def _bos(self) -> Dims:
        return Dims(self.dims.m, 0)

    def __add__(self, other: "GaussianSuperFunction") -> "GaussianSuperFunction":
        if (other.dims, other.center, other.nparam) != (self.dims, self.center, self.nparam):
            raise ValueError("sums need equal dims, centre and parameters")
        comps = dict(self.components)
        for mask, P in other.components.items():
            comps[mask] = comps.get(mask, SuperPolynomial.zero(self._bos())) + P
        return GaussianSuperFunction(self.dims, self.center, {k: v for k, v in comps.items() if not v.is_zero()},
                                     self.nparam)

    def scale(self, factor) -> "GaussianSuperFunction":
        return GaussianSuperFunction(self.dims, self.center, {k: v * factor for k, v in self.components.items()},
                                     self.nparam)

    # evaluation ------------------------------------------------------------
    def component_values(self, coords) -> Dict[int, object]:
        """Bosonic coefficients at coordinates (list of m arrays or jets)."""
        u = [x - float(c) for x, c in zip(coords, self.center)]
        r2 = 0.0
        for ui in u:
            r2 = ui * ui + r2
        g = jet.exp(r2 * -0.5)
        return {mask: _eval_bosonic(P, u) * g for mask, P in self.components.items()}

    def value_at(self, y: Sequence[float]) -> GrassmannElement:
        """phi(y) for a bosonic point: a Grassmann element over [x`][parameters]."""
        vals = self.component_values([np.float64(v) for v in y])
        return GrassmannElement(self.ngen, {k: float(v) for k, v in vals.items()})

    # closure operations --------------------------------------------------------
    def translate(self, y: Sequence) -> "GaussianSuperFunction":
        """x -> phi(x - y) for bosonic y."""
        c = tuple(a + b for a, b in zip(self.center, y))
        return GaussianSuperFunction(self.dims, c, dict(self.components), self.nparam)

    def multiply(self, Q: SuperPolynomial) -> "GaussianSuperFunction":
        """Q(x) phi(x) for a superpolynomial Q over the dims (Q on the left)."""
        if Q.dims != self.dims:
            raise ValueError("multiplier dims differ")
        bos = self._bos()
        acc: Dict[int, SuperPolynomial] = {}
        for qmask in sorted(Q.masks()):
            qpart = _shift_polynomial(Q.fermionic_part(qmask).restrict(range(self.dims.m), [], bos), self.center)
            for amask, P in self.components.items():
                if qmask & amask:
                    continue
                key = qmask | amask
                acc[key] = acc.get(key, SuperPolynomial.zero(bos)) + qpart * P * merge_sign(qmask, amask)
        return GaussianSuperFunction(self.dims, self.center, {k: v for k, v in acc.items() if not v.is_zero()},
                                     self.nparam)

    def d_bosonic(self, j: int) -> "GaussianSuperFunction":
        """d/dx_j: (dP/du_j - u_j P) exp(...)."""
        uj = SuperPolynomial.bosonic(self._bos(), j)
        comps = {k: P.d_bosonic(j) - uj * P for k, P in self.components.items()}
        return GaussianSuperFunction(self.dims, self.center, {k: v for k, v in comps.items() if not v.is_zero()},
                                     self.nparam)

    # integrals -------------------------------------------------------------
    def bosonic_integrals(self) -> Dict[int, float]:
        """int_{R^m} P_A(u) exp(-|u|^2/2) du for every component."""
        m = self.dims.m
        pref = (2 * math.pi) ** (m / 2)
        out = {}
        for mask, P in self.components.items():
            out[mask] = pref * sum(float(c) * math.prod(gaussian_moment(e) for e in a) for (a, _), c in P.items())
        return out

    def integral(self):
        """Full super integral: Berezin over x` of the bosonic integrals.

        Returns a float, or a GrassmannElement over the parameters.
        """
        el = GrassmannElement(self.ngen, self.bosonic_integrals())
        if self.dims.n == 0:
            return el.body() if self.nparam == 0 else el
        out = berezin(el, 1, self.dims.nferm, exact=False)
        if self.nparam == 0:
            return float(out) if not isinstance(out, GrassmannElement) else float(out.body())
        return out

    def fourier_bosonic(self, xi: np.ndarray) -> Dict[int, np.ndarray]:
        """int exp(-i <x, xi>) phi_A(x) dx for each component; xi has shape (..., m).

        Uses int u^b exp(-u^2/2 - i u s) du = sqrt(2 pi) (-i)^b He_b(s) exp(-s^2/2).
        """
        xi = np.asarray(xi, dtype=float)
        m = self.dims.m
        c = self.center_array
        phase = np.exp(-1j * (xi @ c)) * (2 * math.pi) ** (m / 2) * np.exp(-0.5 * np.sum(xi * xi, axis=-1))
        deg = max((P.degree() for P in self.components.values()), default=0)
        he = [hermite_values(max(deg, 1), xi[..., i]) for i in range(m)]
        out = {}
        for mask, P in self.components.items():
            tot = np.zeros(xi.shape[:-1], dtype=complex)
            for (a, _), coeff in P.items():
                term = complex(float(coeff)) * (-1j) ** sum(a)
                for i, e in enumerate(a):
                    term = term * he[i][e]
                tot = tot + term
            out[mask] = phase * tot
        return out

    # adapters -----------------------------------------------------------
    def sphere_integrand(self):
        """This function as a supersphere integrand (x` are the sphere fermions)."""
        from ..sphere.integrals import SmoothComponent, SphereIntegrand
        F = SphereIntegrand(self.dims, nparam=self.nparam)
        for mask in self.components:
            F.add(mask, SmoothComponent(lambda coords, mask=mask: self.component_values(coords)[mask]))
        return F

    def radon_profiles(self, nodes):
        """Bosonic Radon profiles on unit directions (n = 0 only)."""
        from .transform import radon_transform
        if self.dims.n or self.nparam:
            raise ValueError("radon_profiles is defined for bosonic functions")
        return radon_transform(self).profiles(nodes)[0]
