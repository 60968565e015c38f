"""One-dimensional test functions with exact derivatives."""

from __future__ import annotations

import math
from typing import Callable, Sequence

import numpy as np


class TestFunction1D:
    """Smooth, rapidly decreasing function with derivatives on demand."""

    def __call__(self, t):
        raise NotImplementedError

    def derivative(self, j: int = 1) -> "TestFunction1D":
        raise NotImplementedError

    def derivatives_at(self, t: float, order: int):
        """[phi(t), phi'(t), ..., phi^(order)(t)]."""
        out = []
        f = self
        for _ in range(order + 1):
            out.append(f(t))
            f = f.derivative()
        return out

    def reflect(self) -> "TestFunction1D":
        """t -> phi(-t)."""
        return Reflected(self)


class Reflected(TestFunction1D):
    def __init__(self, base: TestFunction1D, sign: int = 1):
        self.base = base
        self.sign = sign

    def __call__(self, t):
        return self.sign * self.base(-np.asarray(t, dtype=float) if not np.isscalar(t) else -t)

    def derivative(self, j: int = 1) -> TestFunction1D:
        return Reflected(self.base.derivative(j), self.sign * (-1) ** j)


class CallableTestFunction(TestFunction1D):
    """Test function from an explicit list of derivative callables."""

    def __init__(self, derivatives: Sequence[Callable]):
        if not derivatives:
            raise ValueError("need at least the function itself")
        self._derivs = list(derivatives)

    def __call__(self, t):
        return self._derivs[0](t)

    def derivative(self, j: int = 1) -> TestFunction1D:
        if j >= len(self._derivs):
            raise ValueError(f"only {len(self._derivs) - 1} derivatives were supplied")
        return CallableTestFunction(self._derivs[j:])

    @property
    def max_order(self) -> int:
        return len(self._derivs) - 1


class PolyGaussian1D(TestFunction1D):
    """Q(t - t0) * exp(-rate (t - t0)^2 / 2), optionally batched.

    ``coeffs`` has the polynomial degree along axis 0 (ascending powers of
    u = t - t0); remaining axes form a batch shape shared with ``t0`` and
    ``rate``.  Evaluation broadcasts ``t`` against the batch shape.
    """

    def __init__(self, coeffs, t0=0.0, rate=1.0):
        self.coeffs = np.asarray(coeffs, dtype=complex if np.iscomplexobj(coeffs) else float)
        if self.coeffs.ndim == 0:
            self.coeffs = self.coeffs[None]
        self.t0 = np.asarray(t0, dtype=float)
        self.rate = np.asarray(rate, dtype=float)

    @property
    def degree(self) -> int:
        return self.coeffs.shape[0] - 1

    def polynomial(self, u):
        out = np.zeros(np.broadcast_shapes(np.shape(u), self.coeffs.shape[1:]), dtype=self.coeffs.dtype)
        for c in self.coeffs[::-1]:
            out = out * u + c
        return out

    def __call__(self, t):
        u = np.asarray(t, dtype=float) - self.t0
        val = self.polynomial(u) * np.exp(-0.5 * self.rate * u * u)
        return val if np.ndim(val) else val.item()

    def derivative(self, j: int = 1) -> "PolyGaussian1D":
        c = self.coeffs
        for _ in range(j):
            K = c.shape[0]
            new = np.zeros((K + 1,) + c.shape[1:], dtype=c.dtype)
            new[:K - 1] += c[1:] * np.arange(1, K).reshape((-1,) + (1,) * (c.ndim - 1))
            new[1:] -= self.rate * c
            c = new
        return PolyGaussian1D(c, self.t0, self.rate)

    def scaled(self, factor) -> "PolyGaussian1D":
        return PolyGaussian1D(self.coeffs * factor, self.t0, self.rate)

    def derivatives_at(self, t: float, order: int):
        out = []
        f = self
        for _ in range(order + 1):
            out.append(f(t))
            f = f.derivative()
        return out

    def fourier(self, r):
        """int exp(-i r t) phi(t) dt, closed form (complex)."""
        r = np.asarray(r, dtype=float)
        # complete the square: u = v - i r / rate, Gaussian moments of v
        a = self.rate
        shift = -1j * r / a
        K = self.coeffs.shape[0]
        total = np.zeros(np.broadcast_shapes(r.shape, self.coeffs.shape[1:]), dtype=complex)
        for k in range(K):
            # E[(shift + V)^k] with V ~ N(0, 1/a)
            mom = np.zeros_like(total)
            for i in range(0, k + 1, 2):
                mom = mom + math.comb(k, i) * shift ** (k - i) * _gauss_moment(i) * a ** (-i / 2)
            total = total + self.coeffs[k] * mom
        pref = np.sqrt(2 * np.pi / a) * np.exp(-0.5 * r * r / a) * np.exp(-1j * r * self.t0)
        return pref * total

    def integral(self):
        """int phi(t) dt."""
        return self.fourier(0.0).real if not np.iscomplexobj(self.coeffs) else self.fourier(0.0)

    def moment(self, k: int, center=0.0):
        """int (t - center)^k phi(t) dt in closed form."""
        a = self.rate
        shift = self.t0 - np.asarray(center, dtype=float)
        K = self.coeffs.shape[0]
        total = np.zeros(np.broadcast_shapes(shift.shape, self.coeffs.shape[1:]), dtype=self.coeffs.dtype)
        for i in range(K):
            # (u + shift)^k u^i against exp(-a u^2 / 2)
            acc = np.zeros_like(total)
            for r in range(k + 1):
                if (r + i) % 2 == 0:
                    acc = acc + math.comb(k, r) * shift ** (k - r) * _gauss_moment(r + i) * a ** (-(r + i) / 2)
            total = total + self.coeffs[i] * acc
        out = np.sqrt(2 * np.pi / a) * total
        return out if np.ndim(out) else out.item()


def _gauss_moment(i: int) -> float:
    """E[Z^i] for a standard normal Z."""
    if i % 2:
        return 0.0
    return float(math.prod(range(i - 1, 0, -2))) if i else 1.0


def gaussian(t0: float = 0.0, rate: float = 1.0, coeffs=(1.0,)) -> PolyGaussian1D:
    return PolyGaussian1D(np.asarray(coeffs, dtype=float), t0, rate)
