"""Exact Gamma arithmetic at integers and half-integers.

Standalone Gamma values are only produced where they are finite; ratios
``Gamma(a+j)/Gamma(a)`` are always telescoped into rational products so they
stay valid across poles.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .scalar import Scalar


class PoleError(ValueError):
    """Raised when a meromorphic quantity is requested exactly at a pole."""

    def __init__(self, message: str, residue=None):
        super().__init__(message)
        self.residue = residue


def rising(a, j: int) -> Fraction:
    """Pochhammer symbol (a)_j = Gamma(a+j)/Gamma(a)."""
    a = Fraction(a)
    out = Fraction(1)
    for i in range(j):
        out *= a + i
    return out


def falling(a, j: int) -> Fraction:
    """a (a-1) ... (a-j+1)."""
    a = Fraction(a)
    out = Fraction(1)
    for i in range(j):
        out *= a - i
    return out


def falling_derivative(a, j: int) -> Fraction:
    """d/da of the falling factorial a (a-1) ... (a-j+1), exact."""
    a = Fraction(a)
    total = Fraction(0)
    for skip in range(j):
        term = Fraction(1)
        for i in range(j):
            if i != skip:
                term *= a - i
        total += term
    return total


def _half_int_arg(a) -> Fraction:
    a = Fraction(a)
    if a.denominator not in (1, 2):
        raise ValueError(f"exact Gamma needs an integer or half-integer argument, got {a}")
    return a


def gamma_exact(a) -> Scalar:
    """Gamma(a) for integer or half-integer a, as an exact Scalar."""
    a = _half_int_arg(a)
    if a.denominator == 1:
        if a <= 0:
            raise PoleError(f"Gamma has a pole at {a}")
        return Scalar(math.factorial(int(a) - 1))
    k = int(a - Fraction(1, 2))  # a = k + 1/2
    if k >= 0:
        c = Fraction(math.factorial(2 * k), 4 ** k * math.factorial(k))
    else:
        kk = -k
        c = Fraction((-4) ** kk * math.factorial(kk), math.factorial(2 * kk))
    return Scalar(c, 1)


def rgamma_exact(a) -> Scalar:
    """1/Gamma(a) for integer or half-integer a; exactly zero at the poles."""
    a = _half_int_arg(a)
    if a.denominator == 1 and a <= 0:
        return Scalar(0)
    return gamma_exact(a).inverse()


def gamma_ratio(a, j: int) -> Fraction:
    """Gamma(a+j)/Gamma(a) for j >= 0 via the telescoping product."""
    if j < 0:
        raise ValueError("gamma_ratio needs j >= 0")
    return rising(a, j)


def harmonic_number(k: int) -> Fraction:
    return sum((Fraction(1, i) for i in range(1, k + 1)), Fraction(0))


def sphere_area(M: int) -> Scalar:
    """sigma_M = 2 pi^(M/2) / Gamma(M/2); zero for M in -2N_0."""
    return 2 * Scalar.pi_power(M) * rgamma_exact(Fraction(M, 2))
