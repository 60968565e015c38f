"""Radial superdistributions |x|^lam, their residues and the super Riesz kernels.

A radial kernel is stored as its fermionic expansion

    sum_j c_j  x`^(2j) |x_bos|^(base - 2j)

(x`^2 = sum x`_{2i-1} x`_{2i}), on which Laplacians act coefficientwise:
the bosonic part by Delta |x|^mu = mu (mu + m - 2) |x|^(mu - 2) and the
fermionic part by Delta_f x`^(2l) = 4 l (n - l + 1) x`^(2l - 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np
from scipy import special

from ..algebra.compose import DomainError
from ..algebra.dims import Dims
from ..algebra.gamma import gamma_exact, rgamma_exact, rising
from ..algebra.scalar import Scalar
from ..algebra.superpoly import SuperPolynomial, fermionic_square, norm_squared, vector


class UnsupportedCase(NotImplementedError):
    """The requested case lies outside what the theory defines."""


def _exact(value) -> bool:
    return isinstance(value, (int, Fraction))


def _is_nonneg_even(value) -> bool:
    if _exact(value):
        v = Fraction(value)
        return v.denominator == 1 and v >= 0 and v.numerator % 2 == 0
    v = float(value)
    return v >= 0 and v.is_integer() and int(v) % 2 == 0


def radial_coefficient(lam, j: int):
    """Coefficient of x`^(2j) |x_bos|^(lam-2j) in |x|^lam: (-lam/2)_j / j!."""
    if _exact(lam):
        return rising(-Fraction(lam) / 2, j) / math.factorial(j)
    return math.prod(-float(lam) / 2 + i for i in range(j)) / math.factorial(j)


def radial_coefficient_falling(lam, j: int):
    """Same coefficient via (-1)^j Gamma(lam/2+1)/Gamma(lam/2-j+1) / j!."""
    half = Fraction(lam) / 2
    out = Fraction(1)
    for i in range(j):
        out *= half - i
    return (-1) ** j * out / math.factorial(j)


@dataclass(frozen=True)
class RadialExpansion:
    """sum_j coeffs[j] x`^(2j) |x_bos|^(base - 2j), j = 0..n."""

    dims: Dims
    base: object
    coeffs: Tuple

    def __post_init__(self):
        if len(self.coeffs) != self.dims.n + 1:
            raise ValueError("need n + 1 coefficients")

    def scale(self, factor) -> "RadialExpansion":
        return RadialExpansion(self.dims, self.base, tuple(c * factor for c in self.coeffs))

    def laplacian(self, part: str = "super") -> "RadialExpansion":
        """Apply Delta (super, bosonic or fermionic part) coefficientwise."""
        m, n = self.dims.m, self.dims.n
        mu = self.base
        c = list(self.coeffs)
        out = []
        for i in range(n + 1):
            mu_i = mu - 2 * i
            term = 0
            if part in ("super", "bosonic"):
                term = term + c[i] * (mu_i * (mu_i + m - 2))
            if part in ("super", "fermionic") and i < n:
                term = term + c[i + 1] * (4 * (i + 1) * (n - i))
            out.append(term)
        return RadialExpansion(self.dims, mu - 2, tuple(out))

    def to_polynomial(self) -> SuperPolynomial:
        """Exact superpolynomial when every bosonic power is a non-negative even integer."""
        x = vector(self.dims)
        r2 = norm_squared(x).body()
        xf2 = fermionic_square(x)
        out = SuperPolynomial.zero(self.dims)
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = Fraction(self.base) - 2 * j
            if e.denominator != 1 or e < 0 or e.numerator % 2:
                raise ValueError(f"|x|^{e} is not a polynomial")
            out = out + (xf2 ** j) * (r2 ** int(e // 2)) * c
        return out

    def evaluate(self, radius, j: int):
        """Numeric value of coeffs[j] |x_bos|^(base-2j) at bosonic radius (array ok)."""
        return float(self.coeffs[j]) * np.asarray(radius, dtype=float) ** float(self.base - 2 * j)


def super_power(dims: Dims, lam) -> RadialExpansion:
    """The superdistribution |x|^lam = (|x_bos|^2 - x`^2)^(lam/2)."""
    if dims.m == 0:
        raise UnsupportedCase("|x|^lam needs at least one bosonic dimension")
    return RadialExpansion(dims, lam, tuple(radial_coefficient(lam, j) for j in range(dims.n + 1)))


# Dirac delta expansions -----------------------------------------------------------

@dataclass(frozen=True)
class DeltaExpansion:
    """sum_j coeffs[j] x`^(2n-2j) Delta_bos^(ell-j) delta(x_bos), j = 0..min(ell, n)."""

    dims: Dims
    ell: int
    coeffs: Tuple

    def scale(self, factor) -> "DeltaExpansion":
        return DeltaExpansion(self.dims, self.ell, tuple(c * factor for c in self.coeffs))

    def terms(self):
        n = self.dims.n
        return [(n - j, self.ell - j, c) for j, c in enumerate(self.coeffs)]


def super_delta_laplacian(dims: Dims, ell: int) -> DeltaExpansion:
    """Delta^ell delta(x) of the super Dirac distribution delta(x) = pi^n delta(x_bos) x`_1...x`_2n."""
    n = dims.n
    coeffs = []
    for j in range(min(ell, n) + 1):
        coeffs.append(Scalar(Fraction(math.factorial(ell) * 4 ** j,
                                      math.factorial(ell - j) * math.factorial(n - j)), 2 * n))
    return DeltaExpansion(dims, ell, tuple(coeffs))


@dataclass(frozen=True)
class SuperResidue:
    dims: Dims
    ell: int
    pole: int
    scalar: Scalar               # multiplies Delta^ell delta(x)
    laplacian_delta: DeltaExpansion
    expansion: DeltaExpansion    # scalar * laplacian_delta
    direct: DeltaExpansion       # term by term from the |x|^lam expansion

    @property
    def consistent(self) -> bool:
        return self.expansion.coeffs == self.direct.coeffs


def super_norm_residue(dims: Dims, ell: int) -> SuperResidue:
    """Residue of |x|^lam at lam = -M - 2 ell, computed two ways."""
    if dims.m == 0:
        raise UnsupportedCase("residues of |x|^lam are only defined for m != 0")
    M, m, n = dims.M, dims.m, dims.n
    scalar = 2 * Scalar.pi_power(M) * rgamma_exact(Fraction(M, 2) + ell) \
        * Fraction(1, 4 ** ell * math.factorial(ell))
    lap = super_delta_laplacian(dims, ell)
    expansion = lap.scale(scalar)
    direct = []
    for j in range(min(ell, n) + 1):
        i = n - j  # power x`^(2i) of the |x|^lam expansion
        c = rising(Fraction(M, 2) + ell, i) / math.factorial(i)
        bos = 2 * Scalar.pi_power(m) * rgamma_exact(Fraction(m, 2) + ell - j) \
            * Fraction(1, 4 ** (ell - j) * math.factorial(ell - j))
        direct.append(bos * c)
    return SuperResidue(dims, ell, -M - 2 * ell, scalar, lap, expansion,
                        DeltaExpansion(dims, ell, tuple(direct)))


def normalized_power_at_pole(dims: Dims, ell: int) -> DeltaExpansion:
    """|x|^lam / Gamma((lam+M)/2) at lam = -M - 2 ell, as a delta expansion."""
    if dims.m == 0:
        raise UnsupportedCase("the normalized power is only defined for m != 0")
    M = dims.M
    factor = (-1) ** ell * Scalar.pi_power(M) * rgamma_exact(Fraction(M, 2) + ell) * Fraction(1, 4 ** ell)
    return super_delta_laplacian(dims, ell).scale(factor)


# Riesz kernels ----------------------------------------------------------------------

def riesz_normalization(M: int, gamma):
    """H_M(gamma) = 2^gamma pi^(M/2) Gamma(gamma/2) / Gamma((M-gamma)/2).

    Exact Scalar for integer gamma, float otherwise.  Zero when
    gamma - M lies in 2N_0; raises DomainError at the poles gamma in -2N_0.
    """
    if _is_nonneg_even(-gamma if _exact(gamma) else -float(gamma)):
        raise DomainError(f"Gamma(gamma/2) has a pole at gamma={gamma}")
    if _exact(gamma) and Fraction(gamma).denominator == 1:
        g = int(gamma)
        return Scalar(Fraction(2) ** g) * Scalar.pi_power(M) * gamma_exact(Fraction(g, 2)) \
            * rgamma_exact(Fraction(M - g, 2))
    g = float(gamma)
    return 2 ** g * math.pi ** (M / 2) * special.gamma(g / 2) * special.rgamma((M - g) / 2)


def inverse_riesz_normalization(M: int, gamma):
    """1/H_M(gamma) = Gamma((M-gamma)/2) / (2^gamma pi^(M/2) Gamma(gamma/2)); zero at gamma in -2N_0."""
    if _is_nonneg_even(gamma - M if _exact(gamma) else float(gamma) - M):
        raise DomainError(f"Gamma((M-gamma)/2) has a pole at gamma={gamma}, M={M}")
    if _exact(gamma) and Fraction(gamma).denominator == 1:
        g = int(gamma)
        return Scalar(Fraction(2) ** (-g)) * Scalar.pi_power(-M) * gamma_exact(Fraction(M - g, 2)) \
            * rgamma_exact(Fraction(g, 2))
    g = float(gamma)
    return 2 ** (-g) * math.pi ** (-M / 2) * special.gamma((M - g) / 2) * special.rgamma(g / 2)


@dataclass(frozen=True)
class RieszKernel:
    """K^M_gamma(x) = |x|^(gamma - M) / H_M(gamma)."""

    dims: Dims
    gamma: object
    H: object = field(compare=False)
    expansion: RadialExpansion = field(compare=False)


def riesz_kernel(dims: Dims, gamma) -> RieszKernel:
    M = dims.M
    minus = -gamma - M if _exact(gamma) else -float(gamma) - M
    plus = gamma - M if _exact(gamma) else float(gamma) - M
    if _is_nonneg_even(plus) or _is_nonneg_even(minus):
        raise DomainError(f"Riesz kernel K^{M}_{gamma} lies on the excluded set")
    H = riesz_normalization(M, gamma)
    lam = gamma - M
    expansion = super_power(dims, lam).scale(H.inverse() if isinstance(H, Scalar) else 1.0 / H)
    return RieszKernel(dims, gamma, H, expansion)


def riesz_laplacian_step(K: RieszKernel) -> RieszKernel:
    """(-Delta) K_gamma = K_(gamma-2), checked on the radial expansion."""
    target = riesz_kernel(K.dims, K.gamma - 2)
    got = K.expansion.laplacian().scale(-1)
    for a, b in zip(got.coeffs, target.expansion.coeffs):
        if isinstance(a, Scalar) and isinstance(b, Scalar):
            ok = a == b
        else:
            ok = math.isclose(float(a), float(b), rel_tol=1e-12, abs_tol=1e-300)
        if not ok:
            raise ArithmeticError(f"Laplacian step mismatch: {a} vs {b}")
    return target


# fractional super Laplacian ---------------------------------------------------------

def _check_frac_domain(dims: Dims, s) -> None:
    M = dims.M
    if _is_nonneg_even(2 * s - M) or _is_nonneg_even(-2 * s - M):
        raise DomainError(f"s={s} lies on the excluded set for M={M}")


def frac_laplacian_fundamental_coeffs(dims: Dims, s, check_domain: bool = True) -> List[Scalar]:
    """a_j = pi^n 4^j (s)_j / (n-j)!, j = 0..n."""
    s = Fraction(s)
    if check_domain:
        _check_frac_domain(dims, s)
    n = dims.n
    return [Scalar(4 ** j * rising(s, j) / math.factorial(n - j), 2 * n) for j in range(n + 1)]


def coefficient_system_residuals(dims: Dims, s, coeffs=None) -> List[Scalar]:
    """Left-hand sides of sum_j 4^j a_(l-j) (n-l+j)! C(l,j) (-s)_j = 0 for l = 1..n."""
    s = Fraction(s)
    n = dims.n
    a = coeffs if coeffs is not None else frac_laplacian_fundamental_coeffs(dims, s, check_domain=False)
    out = []
    for ell in range(1, n + 1):
        total = Scalar(0)
        for j in range(ell + 1):
            total = total + a[ell - j] * (4 ** j * math.factorial(n - ell + j) * math.comb(ell, j) * rising(-s, j))
        out.append(total)
    return out


def chu_vandermonde_sum(ell: int, s) -> Fraction:
    """sum_j C(l,j) (s)_(l-j) (-s)_j, identically zero for l >= 1."""
    s = Fraction(s)
    return sum((math.comb(ell, j) * rising(s, ell - j) * rising(-s, j) for j in range(ell + 1)), Fraction(0))


@dataclass(frozen=True)
class FundamentalSolutionCheck:
    """Coefficients of x`^(2n-2j) |x_bos|^(2s+2j-m), j = 0..n, from three routes.

    ``common`` is the factor Gamma((M-2s)/2) / (4^s pi^(M/2) Gamma(s)) that
    every route shares; the route coefficients are the rational (times pi
    power) cofactors.  With ``factored=False`` the common factor is already
    multiplied in and must be finite.
    """

    dims: Dims
    s: Fraction
    common: object
    assembled: Tuple
    closed: Tuple
    series: Tuple

    @property
    def agree(self) -> bool:
        return self.assembled == self.closed == self.series


def fundamental_solution_check(dims: Dims, s, factored: bool = False) -> FundamentalSolutionCheck:
    """Assemble sum a_j (-Delta_bos)^(n-j)[K^m_(2s+2n)] x`^(2n-2j) and compare with K^M_2s.

    The routes are (a) the assembly above with the bosonic Laplacian rule,
    (b) 1/H_M(2s) times the |x|^(2s-M) expansion and (c) the closed sum with
    Gamma(m/2 - s - j).  All three carry the common Gamma factor, so in
    factored mode the identity is compared on the exact cofactors; this stays
    meaningful where the unfactored kernel is not defined.
    """
    s = Fraction(s)
    m, n, M = dims.m, dims.n, dims.M
    if not factored:
        _check_frac_domain(dims, s)
    a = frac_laplacian_fundamental_coeffs(dims, s, check_domain=not factored)
    z = Fraction(M, 2) - s  # Gamma(z) is the shared factor
    # (a) 1/H_m(2s+2n) = Gamma(z)/(4^(s+n) pi^(m/2) Gamma(s+n)) = common * pi^n / (4^n (s)_n)
    assembled = []
    for j in range(n + 1):
        mu = 2 * s + 2 * n - m
        c = Fraction(1)
        for _ in range(n - j):
            c *= -(mu * (mu + m - 2))
            mu -= 2
        c /= 4 ** n * rising(s, n)
        # a_j carries pi^n; with pi^(-m/2) from H it leaves pi^(-M/2) = common's pi power
        rational = a[j] * c * Scalar.pi_power(-2 * n)
        assembled.append(rational)
    # (b) |x|^(2s-M) coefficient of x`^(2i) is (z)_i / i!, with i = n - j
    closed = tuple(Scalar(rising(z, n - j) / math.factorial(n - j)) for j in range(n + 1))
    # (c) Gamma(m/2 - s - j) = Gamma(z) (z)_(n-j)
    series = tuple(Scalar(rising(z, n - j) / math.factorial(n - j)) for j in range(n + 1))
    if factored:
        common = None
        if not (z.denominator == 1 and z <= 0):
            common = _common_factor(M, s)
        return FundamentalSolutionCheck(dims, s, common, tuple(assembled), closed, series)
    common = _common_factor(M, s)
    mul = (lambda c: c * common)
    return FundamentalSolutionCheck(dims, s, common, tuple(map(mul, assembled)), tuple(map(mul, closed)),
                                    tuple(map(mul, series)))


def _common_factor(M: int, s: Fraction):
    z = Fraction(M, 2) - s
    if z.denominator == 1 and z <= 0:
        raise DomainError(f"Gamma({z}) has a pole")
    if (2 * s).denominator == 1:
        four = Scalar(Fraction(2) ** (-int(2 * s)))
        return gamma_exact(z) * four * Scalar.pi_power(-M) * rgamma_exact(s)
    return math.gamma(float(z)) / (4 ** float(s) * math.pi ** (M / 2) * math.gamma(float(s)))


def fundamental_solution_expansion(dims: Dims, s) -> RadialExpansion:
    """K^M_2s as a radial expansion (1/H_M(2s)) |x|^(2s-M)."""
    s = Fraction(s)
    _check_frac_domain(dims, s)
    return super_power(dims, 2 * s - dims.M).scale(inverse_riesz_normalization(dims.M, 2 * s))
