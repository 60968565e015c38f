"""Homogeneous generalized functions on the line and their regularized pairings.

Every pairing is written as

    int_0^tau  t^lam R_L(t) dt  +  int_tau^1 t^lam R_L(t) dt  +  int_1^inf t^lam psi(t) dt
        + sum_{j<L} psi^(j)(0) / (j! (lam + j + 1))

where psi is the relevant (reflected, even or odd) combination of the test
function, R_L its Taylor remainder after L terms and L = floor(-lam) + 1 for
negative lam.  The piece on (0, tau] is integrated term by term from the
Taylor series, so no quadrature ever meets the endpoint singularity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np
from scipy import integrate

from ..algebra.gamma import PoleError
from .testfunc import TestFunction1D

FAMILIES = ("t_plus", "t_minus", "abs_pow", "sgn_abs_pow", "delta_derivative")

SERIES_CUT = 0.125
SERIES_TERMS = 18


@dataclass(frozen=True)
class Kernel1D:
    family: str
    lam: object = 0
    order: int = 0  # only for delta_derivative

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown kernel family {self.family!r}")

    def pole(self) -> bool:
        return _pole_index(self.family, self.lam) is not None


@dataclass(frozen=True)
class ResidueDescriptor:
    """coefficient * delta^(order) at lam = pole."""

    family: str
    pole: int
    coefficient: Fraction
    order: int

    def pair(self, phi: TestFunction1D):
        f = phi.derivative(self.order) if self.order else phi
        return float(self.coefficient) * (-1) ** self.order * f(0.0)


def _is_integer(lam) -> bool:
    if isinstance(lam, (int, Fraction)):
        return Fraction(lam).denominator == 1
    return float(lam).is_integer()


def _pole_index(family: str, lam):
    """Residue index l if lam lies on the family's pole set, else None."""
    if family == "delta_derivative" or not _is_integer(lam) or lam >= 0:
        return None
    k = -int(lam)
    if family in ("t_plus", "t_minus"):
        return k
    if family == "abs_pow" and k % 2 == 1:
        return (k - 1) // 2
    if family == "sgn_abs_pow" and k % 2 == 0:
        return k // 2
    return None


def residue_1d(family: str, ell: int) -> ResidueDescriptor:
    """Residue of the family at its ell-th pole.

    t_plus, t_minus: pole at -ell, delta^(ell-1).  abs_pow: pole at -2ell-1,
    delta^(2ell).  sgn_abs_pow: pole at -2ell, delta^(2ell-1).
    """
    if family == "t_plus":
        if ell < 1:
            raise ValueError("t_plus poles start at ell = 1")
        return ResidueDescriptor(family, -ell, Fraction((-1) ** (ell - 1), math.factorial(ell - 1)), ell - 1)
    if family == "t_minus":
        if ell < 1:
            raise ValueError("t_minus poles start at ell = 1")
        return ResidueDescriptor(family, -ell, Fraction(1, math.factorial(ell - 1)), ell - 1)
    if family == "abs_pow":
        if ell < 0:
            raise ValueError("abs_pow poles start at ell = 0")
        return ResidueDescriptor(family, -2 * ell - 1, Fraction(2, math.factorial(2 * ell)), 2 * ell)
    if family == "sgn_abs_pow":
        if ell < 1:
            raise ValueError("sgn_abs_pow poles start at ell = 1")
        return ResidueDescriptor(family, -2 * ell, Fraction(-2, math.factorial(2 * ell - 1)), 2 * ell - 1)
    raise ValueError(f"family {family!r} has no poles")


def _subtractions(lam: float) -> int:
    return math.floor(-lam) + 1 if lam < 0 else 0


def mellin_pairing(lam, value: Callable, deriv0: Callable[[int], object], vanishing=lambda j: False,
                   tol: float = 1e-12, series_terms: int = SERIES_TERMS):
    """Continued value of int_0^inf t^lam psi(t) dt.

    ``value(t)`` evaluates psi (scalar or array valued), ``deriv0(j)`` returns
    psi^(j)(0) and ``vanishing(j)`` flags derivatives known to be exactly zero,
    which removes their (possibly singular) boundary terms.
    """
    lamf = float(lam)
    L = _subtractions(lamf)
    coeffs = [np.asarray(deriv0(j), dtype=float) / math.factorial(j) for j in range(L + series_terms)]
    for j in range(L):
        if not vanishing(j) and lamf + j + 1 == 0:
            raise PoleError(f"pairing has a pole at lam={lam}")

    tau = SERIES_CUT
    total = np.zeros_like(coeffs[0])
    # (0, tau]: remainder series integrated term by term
    for j in range(L, L + series_terms):
        if vanishing(j):
            continue
        total = total + coeffs[j] * tau ** (lamf + j + 1) / (lamf + j + 1)

    def remainder(t):
        v = np.asarray(value(t), dtype=float)
        for j in range(L):
            if not vanishing(j):
                v = v - coeffs[j] * t ** j
        return t ** lamf * v

    mid, _ = integrate.quad_vec(remainder, tau, 1.0, epsabs=tol, epsrel=tol)
    tail, _ = integrate.quad_vec(lambda t: t ** lamf * np.asarray(value(t), dtype=float), 1.0, np.inf,
                                 epsabs=tol, epsrel=tol)
    total = total + mid + tail
    for j in range(L):
        if not vanishing(j):
            total = total + coeffs[j] / (lamf + j + 1)
    return total if np.ndim(total) else float(total)


def pair_kernel_1d(k: Kernel1D, phi: TestFunction1D, tol: float = 1e-12):
    """<k, phi> for a homogeneous kernel, by analytic continuation in lam."""
    if k.family == "delta_derivative":
        f = phi.derivative(k.order) if k.order else phi
        return (-1) ** k.order * f(0.0)
    idx = _pole_index(k.family, k.lam)
    if idx is not None:
        raise PoleError(f"{k.family} has a pole at lam={k.lam}", residue_1d(k.family, idx))
    lamf = float(k.lam)
    n_der = _subtractions(lamf) + SERIES_TERMS
    if k.family == "t_plus":
        d = phi.derivatives_at(0.0, n_der)
        return mellin_pairing(k.lam, phi, lambda j: d[j], tol=tol)
    if k.family == "t_minus":
        d = phi.derivatives_at(0.0, n_der)
        return mellin_pairing(k.lam, lambda t: phi(-t), lambda j: (-1) ** j * d[j], tol=tol)
    d = phi.derivatives_at(0.0, n_der)
    if k.family == "abs_pow":
        return mellin_pairing(k.lam, lambda t: phi(t) + phi(-t), lambda j: (1 + (-1) ** j) * d[j],
                              vanishing=lambda j: j % 2 == 1, tol=tol)
    return mellin_pairing(k.lam, lambda t: phi(t) - phi(-t), lambda j: (1 - (-1) ** j) * d[j],
                          vanishing=lambda j: j % 2 == 0, tol=tol)


def principal_value_inverse(value: Callable, tol: float = 1e-12, deriv0: Callable[[int], object] | None = None):
    """<p^-1, psi> = int_0^inf (psi(p) - psi(-p)) / p dp.

    Without derivative data the odd combination is integrated directly; with
    ``deriv0`` the series treatment near the origin is used.
    """
    if deriv0 is not None:
        return mellin_pairing(-1, lambda t: value(t) - value(-t), lambda j: (1 - (-1) ** j) * deriv0(j),
                              vanishing=lambda j: j % 2 == 0, tol=tol)

    def odd(t):
        return (np.asarray(value(t), dtype=float) - np.asarray(value(-t), dtype=float)) / t

    head, _ = integrate.quad_vec(odd, 0.0, 1.0, epsabs=tol, epsrel=tol)
    tail, _ = integrate.quad_vec(odd, 1.0, np.inf, epsabs=tol, epsrel=tol)
    out = head + tail
    return out if np.ndim(out) else float(out)
