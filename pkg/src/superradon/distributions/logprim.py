"""The functions G_l(z) = z^l/l! ln z - a_l z^l, with G_(l+1)' = G_l."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..algebra.compose import DomainError
from ..algebra.gamma import harmonic_number


@lru_cache(maxsize=None)
def log_primitive_coeff(ell: int) -> Fraction:
    """a_0 = 0, a_(l+1) = (a_l + 1/(l+1)!) / (l+1)."""
    if ell < 0:
        raise ValueError("ell must be non-negative")
    a = Fraction(0)
    for k in range(ell):
        a = (a + Fraction(1, math.factorial(k + 1))) / (k + 1)
    return a


def log_primitive_coeff_harmonic(ell: int) -> Fraction:
    """Closed form H_l / l!."""
    return harmonic_number(ell) / math.factorial(ell)


def log_primitive_eval(ell: int, x):
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("G_l is evaluated only at positive arguments")
    a = float(log_primitive_coeff(ell))
    out = x ** ell / math.factorial(ell) * np.log(x) - a * x ** ell
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class LogPrimitive:
    ell: int

    @property
    def coeff(self) -> Fraction:
        return log_primitive_coeff(self.ell)

    def __call__(self, x):
        return log_primitive_eval(self.ell, x)

    def derivative(self) -> "LogPrimitive":
        if self.ell == 0:
            raise ValueError("G_0' = 1/z is not a log primitive")
        return LogPrimitive(self.ell - 1)
