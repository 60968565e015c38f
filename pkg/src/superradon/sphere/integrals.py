"""Integrals over the supersphere x^2 = -1.

Two routes are provided.  The algebraic one (Pizzetti) sums iterated
Laplacians at the origin.  The delta route expands the concentrated delta
delta(x^2 + 1) into Berezin weights times layer pairings

    int delta^(j)(1 - |x|^2) F_A(x) dx = 1/2 int_S (d/d r^2)^j [r^(m-2) F_A(r w)]|_(r=1) dS_w

and evaluates the layers on a sphere quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Union

import numpy as np

from .. import jet
from ..algebra.compose import DomainError
from ..algebra.dims import Dims
from ..algebra.gamma import falling, falling_derivative, gamma_exact, rgamma_exact
from ..algebra.grassmann import GrassmannElement, berezin
from ..algebra.scalar import Scalar
from ..algebra.superpoly import SuperPolynomial, SuperVector, vector
from ..operators import euler, laplacian
from .quadrature import SphereQuadrature, sphere_quadrature


class ContractViolation(ValueError):
    """An input does not satisfy the documented preconditions."""


# ---------------------------------------------------------------------------
# algebraic route

def _restrict_to_complement(P: SuperPolynomial, block: SuperVector) -> SuperPolynomial:
    """Set the block's variables to zero, keeping every other variable."""
    amb = P.dims
    bos = [i for i in range(amb.m) if not block.bos_offset <= i < block.bos_offset + block.dims.m]
    fer = [i for i in range(amb.nferm) if not block.ferm_offset <= i < block.ferm_offset + block.dims.nferm]
    return P.restrict(bos, fer, Dims(len(bos), len(fer) // 2))


def _at_origin(P: SuperPolynomial, block: Optional[SuperVector]):
    if block is None:
        return P.constant_term()
    return _restrict_to_complement(P, block)


def pizzetti(P: SuperPolynomial, dims: Optional[Dims] = None, block: Optional[SuperVector] = None):
    """sum_j 2 pi^(M/2) / (4^j j! Gamma(j + M/2)) Delta^j[P](0).

    With ``block`` the integral runs over that block of a joint space and the
    result is a polynomial in the remaining variables.
    """
    sub = block.dims if block is not None else (dims or P.dims)
    if block is None and P.dims != sub:
        raise ValueError("polynomial and dimensions differ")
    M = sub.M
    total = Scalar(0) if block is None else SuperPolynomial.zero(_restrict_to_complement(P, block).dims)
    F = P
    j = 0
    while not F.is_zero():
        c = 2 * Scalar.pi_power(M) * rgamma_exact(Fraction(M, 2) + j) * Fraction(1, 4 ** j * math.factorial(j))
        if c:
            total = total + _at_origin(F, block) * c
        F = laplacian(F, block)
        j += 1
    return total


def normalized_integral(P: SuperPolynomial, dims: Optional[Dims] = None, block: Optional[SuperVector] = None):
    """Integral divided by the (vanishing) area for M = -2k.

    sum_{j<=k} (k-j)! / (4^j j! k!) (-Delta)^j [P](0), defined for polynomials
    of degree <= 2k+1 only.
    """
    sub = block.dims if block is not None else (dims or P.dims)
    if sub.M > 0 or sub.M % 2:
        raise DomainError(f"the normalized integral needs M = -2k, got M = {sub.M}")
    k = -sub.M // 2
    deg = _block_degree(P, block)
    if deg > 2 * k + 1:
        raise ContractViolation(f"normalized integral is defined up to degree {2 * k + 1}, got {deg}")
    total = Fraction(0) if block is None else SuperPolynomial.zero(_restrict_to_complement(P, block).dims)
    F = P
    for j in range(k + 1):
        c = Fraction(math.factorial(k - j), 4 ** j * math.factorial(j) * math.factorial(k))
        total = total + _at_origin(F, block) * c
        F = -laplacian(F, block)
    return total


def _block_degree(P: SuperPolynomial, block: Optional[SuperVector]) -> int:
    if block is None:
        return P.degree()
    deg = -1
    for (a, mask), _ in P.items():
        d = sum(a[block.bos_offset:block.bos_offset + block.dims.m])
        d += (mask >> block.ferm_offset & ((1 << block.dims.nferm) - 1)).bit_count()
        deg = max(deg, d)
    return deg


# ---------------------------------------------------------------------------
# delta route

class Component:
    """Bosonic coefficient F_B of a supersphere integrand."""

    def layer(self, quad: SphereQuadrature, j: int) -> np.ndarray:
        """(d/d r^2)^j [r^(m-2) F_B(r w)] at r = 1, on the quadrature nodes."""
        raise NotImplementedError


@dataclass
class SmoothComponent(Component):
    """F_B given by a callable on coordinate lists (numpy arrays or jets)."""

    fn: Callable

    def layer(self, quad, j):
        m = quad.m
        t = jet.Jet.variable(1, j, 0, np.ones(quad.size))
        r = jet.sqrt(t)
        x = [r * quad.nodes[:, i] for i in range(m)]
        val = self.fn(x) if m == 2 else t ** ((m - 2) / 2) * self.fn(x)
        if not isinstance(val, jet.Jet):
            return np.full(quad.size, float(val)) if j == 0 else np.zeros(quad.size)
        return val.coefficient((j,)) * math.factorial(j)


@dataclass
class HomogeneousComponent(Component):
    """F_B(r w) = r^degree (A(w) + C(w) ln r), with A, C sampled on the nodes."""

    values: np.ndarray
    degree: object
    log_values: Optional[np.ndarray] = None

    def layer(self, quad, j):
        a = Fraction(quad.m - 2, 2) + Fraction(self.degree) / 2
        out = float(falling(a, j)) * np.asarray(self.values)
        if self.log_values is not None:
            # ln r = ln(t)/2 and d^j/dt^j [t^a ln t] at t = 1 is d/da of the falling factorial
            out = out + 0.5 * float(falling_derivative(a, j)) * np.asarray(self.log_values)
        return out


@dataclass
class PolynomialComponent(Component):
    """Bosonic polynomial over Dims(m, 0), split into homogeneous parts."""

    poly: SuperPolynomial

    def layer(self, quad, j):
        out = np.zeros(quad.size)
        for d in sorted(self.poly.degrees()):
            part = self.poly.homogeneous_part(d)
            vals = eval_poly(part, quad.coords())
            out = out + float(falling(Fraction(quad.m - 2 + d, 2), j)) * vals
        return out


def eval_poly(P: SuperPolynomial, coords):
    """Bosonic polynomial (mask 0 terms) at coordinates; generic over arrays and jets."""
    total = 0.0
    for (a, mask), c in P.items():
        if mask:
            raise ValueError("eval_poly expects a purely bosonic polynomial")
        term = float(c)
        for x, e in zip(coords, a):
            if e:
                term = term * x ** e
        total = term + total
    return total


@dataclass
class SphereIntegrand:
    """F(w) = sum_B F_B(w_bos) e_B over generators [w` (2n)][parameters]."""

    dims: Dims
    components: Dict[int, List[Component]] = field(default_factory=dict)
    nparam: int = 0

    @property
    def ngen(self) -> int:
        return self.dims.nferm + self.nparam

    def add(self, mask: int, comp: Component) -> None:
        self.components.setdefault(mask, []).append(comp)

    @classmethod
    def from_polynomial(cls, P: SuperPolynomial) -> "SphereIntegrand":
        bos = Dims(P.dims.m, 0)
        out = cls(P.dims)
        for mask in sorted(P.masks()):
            part = P.fermionic_part(mask).restrict(range(P.dims.m), [], bos)
            out.add(mask, PolynomialComponent(part))
        return out


@lru_cache(maxsize=None)
def layer_weights(n: int, nparam: int, j: int, mask: int):
    """int_B  w`^(2j)/j! w`_mask  as a Grassmann element over the parameters."""
    ngen = 2 * n + nparam
    sq = GrassmannElement(ngen)
    for i in range(n):
        sq = sq + GrassmannElement(ngen, {(1 << 2 * i) | (1 << (2 * i + 1)): 1})
    e = sq ** j * Fraction(1, math.factorial(j)) * GrassmannElement(ngen, {mask: 1})
    if n == 0:
        return e
    out = berezin(e, 1, 2 * n)
    return out if isinstance(out, GrassmannElement) else GrassmannElement.one(0, out)


def supersphere_integral(F: SphereIntegrand, quad: Optional[SphereQuadrature] = None):
    """2 int int_B delta(w^2 + 1) F(w) dw by Berezin weights and layer pairings.

    Returns a float, or a GrassmannElement over the parameter generators.
    """
    if F.dims.m == 0:
        raise DomainError("the delta route needs m >= 1; use normalized_integral for m = 0")
    quad = quad or sphere_quadrature(F.dims.m)
    n = F.dims.n
    total = GrassmannElement(F.nparam)
    for mask, comps in F.components.items():
        for j in range(n + 1):
            wts = layer_weights(n, F.nparam, j, mask)
            if wts.is_zero():
                continue
            val = sum(float(quad.integrate(c.layer(quad, j))) for c in comps)
            total = total + wts.map(lambda c: c * val)
    total = total.map(float)
    return total.body() if F.nparam == 0 else total


def supersphere_integral_delta_route(F, dims: Optional[Dims] = None, quad: Optional[SphereQuadrature] = None):
    """Delta-route integral of a SuperPolynomial, a SphereIntegrand or any
    object providing ``sphere_integrand()`` (Gaussian-class functions)."""
    if isinstance(F, SuperPolynomial):
        if dims is not None and F.dims != dims:
            raise ValueError("polynomial and dimensions differ")
        F = SphereIntegrand.from_polynomial(F)
    elif not isinstance(F, SphereIntegrand):
        F = F.sphere_integrand()
    return supersphere_integral(F, quad)


def radial_composition(f: Callable, P: SuperPolynomial) -> SphereIntegrand:
    """Integrand f(|x|) P(x) with the super norm |x| = (|x_bos|^2 - x`^2)^(1/2).

    ``f`` must accept jets (use superradon.jet.exp, sqrt, ...).  With
    g(s) = f(sqrt(s)), f(|x|) = sum_i g^(i)(|x_bos|^2) (-x`^2)^i / i!.
    """
    dims = P.dims
    x = vector(dims)
    from ..algebra.superpoly import fermionic_square
    mx2 = -fermionic_square(x)
    bos = Dims(dims.m, 0)
    out = SphereIntegrand(dims)
    power = SuperPolynomial.constant(dims)
    for i in range(dims.n + 1):
        G = power * P * Fraction(1, math.factorial(i))
        for mask in sorted(G.masks()):
            part = G.fermionic_part(mask).restrict(range(dims.m), [], bos)
            out.add(mask, SmoothComponent(_radial_times(f, i, part)))
        power = power * mx2
    return out


def _radial_times(f, i, part):
    def fn(coords):
        s = 0.0
        for c in coords:
            s = c * c + s
        return _g_derivative(f, i, s) * eval_poly(part, coords)
    return fn


def _g_derivative(f, i, s):
    """g^(i)(s) for g(s) = f(sqrt(s)); ``s`` may be an array or a jet."""
    if isinstance(s, jet.Jet):
        derivs = []
        for k in range(s.N + 1):
            derivs.append(_g_derivative(f, i + k, s.value))
        return s._compose(derivs)
    s = np.asarray(s, dtype=float)
    h = jet.Jet.variable(1, i, 0, s)
    return (f(jet.sqrt(h))).coefficient((i,)) * math.factorial(i) if i else f(np.sqrt(s))


# ---------------------------------------------------------------------------
# Funk-Hecke

def _check_harmonic(H: SuperPolynomial) -> int:
    if not laplacian(H).is_zero():
        raise ContractViolation("H is not harmonic")
    if not H.is_homogeneous() or H.is_zero():
        raise ContractViolation("H is not homogeneous")
    ell = H.degree()
    if euler(H) != H * ell:
        raise ContractViolation("H is not an Euler eigenfunction")
    return ell


def funk_hecke(dims: Dims, j: int, H: SuperPolynomial, normalized: bool = False) -> Scalar:
    """Coefficient in int <x, w>^j H(w) dS_w = alpha |x|^(j-l) H(x).

    The normalized variant (M = -2k, j + l <= 2k + 1) gives the coefficient
    of x^(j-l) H(x) in the normalized integral.
    """
    ell = _check_harmonic(H)
    M = dims.M
    zero = (j + ell) % 2 or j < ell
    if normalized:
        if M > 0 or M % 2:
            raise DomainError(f"normalized Funk-Hecke needs M = -2k, got {M}")
        k = -M // 2
        if j + ell > 2 * k + 1:
            raise ContractViolation(f"normalized Funk-Hecke needs j + l <= {2 * k + 1}")
        if zero:
            return Scalar(0)
        c = Fraction((-1) ** j * math.factorial(k - (j + ell) // 2) * math.factorial(j),
                     2 ** ell * math.factorial(k) * math.factorial(j - ell))
        return c * Scalar.pi_power(-1) * gamma_exact(Fraction(j - ell + 1, 2))
    if dims.m == 0:
        raise DomainError("the plain Funk-Hecke coefficient needs m != 0")
    if zero:
        return Scalar(0)
    c = Fraction(2 * math.factorial(j), 2 ** ell * math.factorial(j - ell))
    return (c * Scalar.pi_power(M - 1) * gamma_exact(Fraction(j - ell + 1, 2))
            * rgamma_exact(Fraction(M + j + ell, 2)))


def funk_hecke_sides(dims: Dims, j: int, H: SuperPolynomial, normalized: bool = False):
    """(integral expanded by Pizzetti in the w block, alpha |x|^(j-l) H(x)) as polynomials in x."""
    from ..algebra.superpoly import clifford_square, inner_product, joint_vectors, norm_squared
    ell = _check_harmonic(H)
    x, w = joint_vectors(dims, ("x", "w"))
    amb = x.space
    Hw = H.embed(amb, dims.m, dims.nferm)
    integrand = inner_product(x, w) ** j * Hw
    lhs = normalized_integral(integrand, block=w) if normalized else pizzetti(integrand, block=w)
    coeff = funk_hecke(dims, j, H, normalized)
    xs = vector(dims)
    if (j - ell) % 2 or j < ell:
        return lhs, SuperPolynomial.zero(dims)
    radial = clifford_square(xs) if normalized else norm_squared(xs)
    rhs = radial ** ((j - ell) // 2) * H * coeff
    return lhs, rhs


def harmonics(dims: Dims, max_degree: int = 3) -> List[SuperPolynomial]:
    """Small fixed list of homogeneous harmonics (verified on construction)."""
    m, nf = dims.m, dims.nferm
    cands = [SuperPolynomial.constant(dims)]
    B = lambda j: SuperPolynomial.bosonic(dims, j)
    F = lambda j: SuperPolynomial.fermionic(dims, j)
    if m >= 1:
        cands.append(B(1))
    if nf >= 1:
        cands.append(F(1))
    if m >= 2:
        cands += [B(1) * B(2), B(1) ** 2 - B(2) ** 2, B(1) ** 3 - B(1) * B(2) ** 2 * 3]
    if m >= 1 and nf >= 2:
        # Delta_bos x1^2 = 2 and the fermionic Laplacian of x`1 x`2 is 4
        cands.append(B(1) ** 2 - F(1) * F(2) * Fraction(1, 2))
    if m >= 1 and nf >= 1:
        cands.append(B(1) * F(1))
    if nf >= 4:
        cands.append(F(1) * F(3))
    if m >= 3:
        cands.append(B(1) * B(2) * B(3))
    if m >= 1 and nf >= 4:
        cands.append(B(1) * F(1) * F(3))
    if m >= 2 and nf >= 2:
        cands.append(B(1) * B(2) * F(1))
    out = []
    for H in cands:
        if H.degree() <= max_degree:
            _check_harmonic(H)
            out.append(H)
    return out


# ---------------------------------------------------------------------------
# Lemma: integrals of <x`, w`>^l g(<x, w>)

@dataclass(frozen=True)
class FermionicLayerTerm:
    """prefactor * fermionic * (bosonic layer pairing of order ``layer_order``)."""

    prefactor: Scalar
    fermionic: SuperPolynomial
    layer_order: int
    bosonic: Optional[float] = None

    @property
    def vanishes(self) -> bool:
        return self.fermionic.is_zero() or not self.prefactor


def lemma_L3_pairing(dims: Dims, ell: int, g=None, phi=None, x=None,
                     quad: Optional[SphereQuadrature] = None) -> FermionicLayerTerm:
    """int_S <x`, w`>^l g(<x, w>) dS_w reduced to one bosonic layer.

    l odd gives zero; l = 2j gives
    2 (-1)^j Gamma(j + 1/2) / pi^(n + 1/2) x`^(2j) int delta^(n-j)(1 - |w|^2) g(<x, w>) dw.

    The bosonic factor is evaluated when possible: ``g`` callable on jets with
    a bosonic point ``x``, or ``g`` a homogeneous Kernel1D paired weakly with
    a bosonic test function ``phi`` (an object with ``radon_profiles``).
    """
    from ..algebra.superpoly import fermionic_square
    xs = vector(dims)
    if ell % 2 or ell > dims.nferm:
        return FermionicLayerTerm(Scalar(0), SuperPolynomial.zero(dims), 0, 0.0)
    j = ell // 2
    pref = 2 * (-1) ** j * gamma_exact(Fraction(2 * j + 1, 2)) * Scalar.pi_power(-2 * dims.n - 1)
    ferm = fermionic_square(xs) ** j
    order = dims.n - j
    bos = None
    if g is not None and dims.m:
        quad = quad or sphere_quadrature(dims.m)
        if x is not None and callable(g) and not hasattr(g, "family"):
            xb = np.asarray(x, dtype=float)
            fn = lambda coords: g(sum((c * xi for c, xi in zip(coords, xb)), 0.0))
            bos = 0.5 * float(quad.integrate(SmoothComponent(fn).layer(quad, order)))
        elif phi is not None and hasattr(g, "family"):
            bos = _weak_layer(dims.m, order, g, phi, quad)
    return FermionicLayerTerm(pref, ferm, order, bos)


def _weak_layer(m, order, g, phi, quad):
    """int phi(x) int delta^(order)(1 - |w|^2) g(<x, w>) dw dx for homogeneous g.

    g(<x, r w>) = r^lam g(<x, w>) turns the layer into a falling factorial;
    the remaining int_S <g, R[phi](w, .)> dS_w goes through pair_kernel_1d.
    """
    from ..distributions.kernel1d import pair_kernel_1d
    lam = -1 - g.order if g.family == "delta_derivative" else g.lam
    factor = 0.5 * float(falling(Fraction(m - 2, 2) + Fraction(lam) / 2, order))
    profiles = phi.radon_profiles(quad.nodes)
    vals = np.asarray(pair_kernel_1d(g, profiles))
    return factor * float(quad.integrate(vals))
