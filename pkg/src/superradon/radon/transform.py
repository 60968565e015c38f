"""Super Radon transform of Gaussian-class functions in closed form.

Bosonic part: for f(x) = P(u) exp(-|u|^2/2), u = x - c, the Fourier image is
(2 pi)^(m/2) exp(-i<c, xi>) Q(xi) exp(-|xi|^2/2) with
Q(xi) = sum_beta p_beta prod_j (-i)^beta_j He_beta_j(xi_j).  Splitting Q(r w)
into degrees k and inverting the 1-D Fourier transform in r gives

    R_m[f](w, p) = (2 pi)^((m-1)/2) exp(-z^2/2) sum_k Qt_k(w) s^(-k-1) He_k(z),

s = |w|, z = (p - <c, w>) / s, where Qt_k(w) collects the degree-k part of
prod He_beta_j(w_j) with the real sign (-1)^((|beta| - k)/2).  Every
p-derivative raises the Hermite index: (-d/dp)^j -> s^(-j) He_(k+j).

Fermionic part: delta(<x,w> - p) = sum_j <x`, w`>^j / j! delta^(j)(<x,w>_bos - p),
Berezin-integrated against each component x`_A.
"""

from __future__ import annotations

import csv
import itertools
import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .. import jet
from ..algebra.dims import Dims
from ..algebra.grassmann import GrassmannElement, berezin
from ..algebra.superpoly import SuperPolynomial
from ..distributions.kernel1d import Kernel1D, pair_kernel_1d
from ..distributions.testfunc import PolyGaussian1D
from .gaussian import GaussianSuperFunction, _eval_bosonic, hermite_coeffs, hermite_values

Term = Tuple[float, int, int]  # (coefficient, number of fermionic delta derivatives j, component mask A)


def radon_polynomials(P: SuperPolynomial) -> List[SuperPolynomial]:
    """[Qt_0, ..., Qt_d] for a centred bosonic polynomial P over Dims(m, 0)."""
    dims = P.dims
    deg = max(P.degree(), 0)
    out = [SuperPolynomial.zero(dims) for _ in range(deg + 1)]
    for (beta, _), coeff in P.items():
        factors = [hermite_coeffs(b) for b in beta]
        for gamma in itertools.product(*[range(len(f)) for f in factors]):
            c = math.prod(f[g] for f, g in zip(factors, gamma))
            if not c:
                continue
            k = sum(gamma)
            sign = (-1) ** ((sum(beta) - k) // 2)
            out[k] = out[k] + SuperPolynomial.monomial(dims, gamma, 0, coeff * c * sign)
    return out


def _hermite_power_basis(n: int) -> np.ndarray:
    return np.array(hermite_coeffs(n), dtype=float)


@lru_cache(maxsize=None)
def fermionic_delta_weights(n: int, nparam: int, j: int, mask: int) -> GrassmannElement:
    """int_B <x`, w`>^j / j! e_A over x`, as an element over [w`][parameters].

    ``mask`` is a component mask over [x`][parameters].
    """
    nf = 2 * n
    if n == 0:
        return GrassmannElement(nparam, {mask: 1}) if j == 0 else GrassmannElement(nparam)
    ngen = 2 * nf + nparam
    xmask = (1 << nf) - 1
    joint = (mask & xmask) | ((mask >> nf) << (2 * nf))
    # <x`, w`> = -1/2 sum (x`_a w`_b - x`_b w`_a), a = 2i, b = 2i + 1 zero-based
    ip = GrassmannElement(ngen)
    for i in range(n):
        a, b = 2 * i, 2 * i + 1
        ip = ip + GrassmannElement(ngen, {(1 << a) | (1 << (nf + b)): -0.5, (1 << b) | (1 << (nf + a)): 0.5})
    e = ip ** j * (1.0 / math.factorial(j)) * GrassmannElement(ngen, {joint: 1.0})
    out = berezin(e, 1, nf, exact=False)
    return out if isinstance(out, GrassmannElement) else GrassmannElement.one(0, out)


@dataclass
class RadonData:
    """R[phi](w, p) = sum_B R_B(w, p) e_B over generators [w` (2n)][parameters].

    ``deriv`` counts extra p-derivatives applied to the transform; the data
    stays closed form under differentiation and is homogeneous of degree
    -1 - deriv in (w, p), with w` scaling like w.
    """

    dims: Dims
    center: Tuple
    qtilde: Dict[int, List[SuperPolynomial]]
    terms: Dict[int, List[Term]] = field(default_factory=dict)
    nparam: int = 0
    deriv: int = 0

    @property
    def ngen(self) -> int:
        return self.dims.nferm + self.nparam

    @property
    def homogeneity(self) -> int:
        return -1 - self.deriv

    @property
    def masks(self) -> List[int]:
        return sorted(self.terms)

    def derivative(self, d: int = 1) -> "RadonData":
        return replace(self, deriv=self.deriv + d)

    def _order(self, j: int) -> int:
        return j + self.deriv

    # evaluation ------------------------------------------------------------
    def evaluate(self, w: Sequence, p, extra: int = 0) -> Dict[int, object]:
        """Components at a general (not necessarily unit) direction.

        ``w`` is a list of m coordinates and ``p`` a value; both may be numpy
        arrays or jets.  ``extra`` adds further p-derivatives.
        """
        m = self.dims.m
        c = [float(v) for v in self.center]
        s2 = 0.0
        cw = 0.0
        for wi, ci in zip(w, c):
            s2 = wi * wi + s2
            cw = wi * ci + cw
        s = jet.sqrt(s2)
        inv_s = 1.0 / s
        z = (p - cw) * inv_s
        d = self.deriv + extra
        sign = (-1) ** d
        maxj = max((j for ts in self.terms.values() for _, j, _ in ts), default=0)
        maxk = max(len(q) for q in self.qtilde.values()) if self.qtilde else 1
        he = hermite_values(maxk + maxj + d + 1, z)
        spow = [inv_s]
        for _ in range(maxk + maxj + d + 1):
            spow.append(spow[-1] * inv_s)
        gauss = jet.exp(z * z * -0.5) * ((2 * math.pi) ** ((m - 1) / 2) * sign)
        base: Dict[Tuple[int, int], object] = {}
        out = {}
        for B, ts in self.terms.items():
            tot = 0.0
            for coeff, j, A in ts:
                key = (A, j)
                if key not in base:
                    acc = 0.0
                    order = j + d
                    for k, Q in enumerate(self.qtilde[A]):
                        if Q.is_zero():
                            continue
                        acc = _eval_bosonic(Q, w) * spow[k + order] * he[k + order] + acc
                    base[key] = acc
                tot = base[key] * coeff + tot
            out[B] = tot * gauss
        return out

    def profiles(self, nodes, extra: int = 0) -> Dict[int, PolyGaussian1D]:
        """Components on unit directions as batched PolyGaussian1D in p."""
        nodes = np.atleast_2d(np.asarray(nodes, dtype=float))
        m = self.dims.m
        coords = [nodes[:, i] for i in range(m)]
        t0 = nodes @ np.array([float(v) for v in self.center])
        d = self.deriv + extra
        pref = (2 * math.pi) ** ((m - 1) / 2) * (-1) ** d
        cache: Dict[Tuple[int, int], np.ndarray] = {}
        out = {}
        for B, ts in self.terms.items():
            tot = None
            for coeff, j, A in ts:
                key = (A, j)
                if key not in cache:
                    order = j + d
                    qs = self.qtilde[A]
                    K = len(qs) + order
                    acc = np.zeros((K, len(t0)))
                    for k, Q in enumerate(qs):
                        if Q.is_zero():
                            continue
                        he = _hermite_power_basis(k + order)
                        acc[:len(he)] += np.outer(he, np.broadcast_to(_eval_bosonic(Q, coords), t0.shape))
                    cache[key] = acc
                c = cache[key] * coeff
                if tot is None:
                    tot = c
                else:
                    L = max(len(tot), len(c))
                    tot = np.pad(tot, ((0, L - len(tot)), (0, 0))) + np.pad(c, ((0, L - len(c)), (0, 0)))
            out[B] = PolyGaussian1D(tot * pref, t0, 1.0)
        return out

    def grassmann_at(self, w_unit, p) -> GrassmannElement:
        """R[phi](w, p) at one unit direction and one p, as a Grassmann element."""
        prof = self.profiles(np.asarray(w_unit, dtype=float)[None])
        return GrassmannElement(self.ngen, {B: float(np.asarray(f(p)).ravel()[0]) for B, f in prof.items()})

    # export -------------------------------------------------------------------
    def to_csv(self, path, nodes, p_samples) -> int:
        """Rows (subset_mask, w_node, p, value) to a path or open text file; returns the row count."""
        if hasattr(path, "write"):
            return self._write_csv(path, nodes, p_samples)
        with Path(path).open("w", newline="") as fh:
            return self._write_csv(fh, nodes, p_samples)

    def _write_csv(self, fh, nodes, p_samples) -> int:
        prof = self.profiles(nodes)
        p_samples = np.asarray(p_samples, dtype=float)
        rows = 0
        wr = csv.writer(fh, lineterminator="\n")
        wr.writerow(["subset_mask", "w_node", "p", "value"])
        for B in sorted(prof):
            vals = np.asarray(prof[B](p_samples[:, None]))  # (P, N)
            for i in range(vals.shape[1]):
                for k, p in enumerate(p_samples):
                    wr.writerow([B, i, repr(float(p)), repr(float(vals[k, i]))])
                    rows += 1
        return rows


def radon_transform(phi: GaussianSuperFunction) -> RadonData:
    dims = phi.dims
    if dims.m == 0:
        raise ValueError("the Radon transform needs m >= 1")
    qtilde = {A: radon_polynomials(P) for A, P in phi.components.items()}
    terms: Dict[int, List[Term]] = {}
    for A in sorted(phi.components):
        for j in range(dims.nferm + 1):
            wts = fermionic_delta_weights(dims.n, phi.nparam, j, A)
            for B, c in wts.items():
                if c:
                    terms.setdefault(B, []).append((float(c), j, A))
    return RadonData(dims, tuple(phi.center), qtilde, terms, phi.nparam)


# ---------------------------------------------------------------------------
# numeric cross-check

def bosonic_radon_numeric(phi: GaussianSuperFunction, mask: int, w, p, order: int = 24) -> np.ndarray:
    """R_m[phi_A](w, p) for unit w by tensor Gauss-Hermite quadrature on the hyperplane."""
    m = phi.dims.m
    w = np.asarray(w, dtype=float)
    w = w / np.linalg.norm(w)
    basis = np.linalg.qr(np.column_stack([w, np.eye(m)]))[0][:, 1:m]
    c = phi.center_array
    z, wt = np.polynomial.hermite_e.hermegauss(order)
    p = np.atleast_1d(np.asarray(p, dtype=float))
    out = np.zeros_like(p)
    cperp = basis.T @ c if m > 1 else np.zeros(0)
    for idx in itertools.product(range(order), repeat=m - 1):
        t = np.array([cperp[i] + z[k] for i, k in enumerate(idx)])
        weight = math.prod(wt[k] for k in idx)
        x = p[:, None] * w[None] + (basis @ t)[None] if m > 1 else p[:, None] * w[None]
        u = x - c
        P = phi.components[mask]
        poly = _eval_bosonic(P, [u[:, i] for i in range(m)])
        # the Gauss-Hermite weight already carries the transverse Gaussian
        along = np.exp(-0.5 * (p - w @ c) ** 2)
        out = out + weight * poly * along
    return out


# ---------------------------------------------------------------------------
# central slice and pairings

def central_slice_check(phi: GaussianSuperFunction, w, r: float):
    """(F[phi](r w), (2 pi)^(-M/2) int exp(-i r p) R[phi](w, p) dp) as Grassmann elements.

    The super Fourier transform uses exp(-i <x, y>) with the fermionic factor
    expanded in powers of <x`, w`>; both sides live over [w`][parameters].
    """
    dims = phi.dims
    w = np.asarray(w, dtype=float)
    norm = (2 * math.pi) ** (-dims.M / 2)
    ngen = phi.ngen
    fhat = phi.fourier_bosonic(r * w)
    lhs = GrassmannElement(ngen)
    for A, val in fhat.items():
        for j in range(dims.nferm + 1):
            wts = fermionic_delta_weights(dims.n, phi.nparam, j, A)
            factor = (-1j * r) ** j * complex(val)
            lhs = lhs + wts.map(lambda c: c * factor)
    lhs = lhs.map(lambda c: c * norm)
    data = radon_transform(phi)
    prof = data.profiles(w[None])
    rhs = GrassmannElement(ngen, {B: complex(np.asarray(f.fourier(r)).ravel()[0]) * norm for B, f in prof.items()})
    return lhs, rhs


def _shifted(profile: PolyGaussian1D, a0) -> PolyGaussian1D:
    """p -> profile(p + a0)."""
    return PolyGaussian1D(profile.coeffs, profile.t0 - np.asarray(a0, dtype=float), profile.rate)


def shift_expansion(nil: GrassmannElement, order: int, sign: int = 1):
    """[(i, (sign * nil)^i / i!)] for the Taylor shift by a nilpotent even element."""
    out = []
    power = GrassmannElement.one(nil.ngen)
    for i in range(order + 1):
        if i:
            power = power * nil * (sign / i)
        if power.is_zero():
            break
        out.append((i, power))
    return out


def pair_kernel_radon(g: Kernel1D, data, w, shift=0.0, tol: float = 1e-12):
    """int g(p) R[phi](w, p - a) dp for one unit direction.

    ``shift`` is the even value a: a float, or a GrassmannElement whose
    generators extend the data layout [w`][parameters] (extra generators come
    last).  The nilpotent part is handled by Taylor expansion in p.
    """
    if isinstance(data, GaussianSuperFunction):
        data = radon_transform(data)
    w = np.asarray(w, dtype=float)[None]
    if isinstance(shift, GrassmannElement):
        ngen = shift.ngen
        a0 = float(shift.body())
        nil = shift - a0
    else:
        ngen, a0, nil = data.ngen, float(shift), None
    expansion = shift_expansion(nil, data.dims.nferm, sign=-1) if nil is not None else [(0, GrassmannElement.one(ngen))]
    total = GrassmannElement(ngen)
    for i, coeff in expansion:
        prof = data.profiles(w, extra=i)
        for B, f in prof.items():
            val = float(np.asarray(pair_kernel_1d(g, _shifted(f, -a0), tol=tol)).ravel()[0])
            total = total + GrassmannElement(ngen, {B: 1.0}) * coeff * val
    return total
