"""Truncated multivariate Taylor polynomials (forward-mode jets) over numpy arrays.

A Jet in K variables truncated at total order N stores the Taylor
coefficients of every monomial of degree <= N; coefficients may carry a
trailing batch shape, so one jet evaluates a whole quadrature grid.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Callable, List, Sequence, Tuple

import numpy as np


@lru_cache(maxsize=None)
def _layout(K: int, N: int):
    monos: List[Tuple[int, ...]] = []
    for d in range(N + 1):
        for combo in itertools.combinations_with_replacement(range(K), d):
            alpha = [0] * K
            for i in combo:
                alpha[i] += 1
            monos.append(tuple(alpha))
    index = {a: i for i, a in enumerate(monos)}
    I, J, T = [], [], []
    for i, a in enumerate(monos):
        for j, b in enumerate(monos):
            c = tuple(x + y for x, y in zip(a, b))
            if sum(c) <= N:
                I.append(i)
                J.append(j)
                T.append(index[c])
    return monos, index, np.array(I), np.array(J), np.array(T)


class Jet:
    __slots__ = ("K", "N", "coeffs")
    __array_priority__ = 1000  # make numpy defer to Jet's reflected operators

    def __init__(self, K: int, N: int, coeffs):
        self.K, self.N = K, N
        self.coeffs = np.asarray(coeffs, dtype=float)

    # construction ------------------------------------------------------------
    @classmethod
    def constant(cls, K: int, N: int, value) -> "Jet":
        value = np.asarray(value, dtype=float)
        monos = _layout(K, N)[0]
        c = np.zeros((len(monos),) + value.shape)
        c[0] = value
        return cls(K, N, c)

    @classmethod
    def variable(cls, K: int, N: int, i: int, value) -> "Jet":
        """The i-th (zero-based) variable expanded at ``value``."""
        out = cls.constant(K, N, value)
        if N >= 1:
            e = [0] * K
            e[i] = 1
            out.coeffs[_layout(K, N)[1][tuple(e)]] = 1.0
        return out

    @classmethod
    def variables(cls, values: Sequence, N: int) -> List["Jet"]:
        K = len(values)
        return [cls.variable(K, N, i, v) for i, v in enumerate(values)]

    # access ---------------------------------------------------------------------
    @property
    def value(self):
        return self.coeffs[0]

    def coefficient(self, alpha: Sequence[int]):
        return self.coeffs[_layout(self.K, self.N)[1][tuple(alpha)]]

    def derivative(self, alpha: Sequence[int]):
        """Partial derivative d^alpha at the expansion point."""
        return self.coefficient(alpha) * math.prod(math.factorial(a) for a in alpha)

    def gradient(self):
        return np.stack([self.derivative([int(i == k) for i in range(self.K)]) for k in range(self.K)])

    def laplacian(self):
        out = 0.0
        for k in range(self.K):
            e = [0] * self.K
            e[k] = 2
            out = out + self.derivative(e)
        return out

    # arithmetic -------------------------------------------------------------------
    def _coerce(self, other) -> "Jet":
        if isinstance(other, Jet):
            if (other.K, other.N) != (self.K, self.N):
                raise ValueError("jets of different layouts")
            return other
        return Jet.constant(self.K, self.N, other)

    @property
    def batch_shape(self):
        return self.coeffs.shape[1:]

    def _aligned(self, batch) -> np.ndarray:
        """Coefficients broadcast so the batch axes follow numpy's trailing rule."""
        own = self.batch_shape
        common = np.broadcast_shapes(own, batch)
        c = self.coeffs.reshape((self.coeffs.shape[0],) + (1,) * (len(common) - len(own)) + own)
        return np.broadcast_to(c, (self.coeffs.shape[0],) + common)

    def __add__(self, other):
        o = self._coerce(other)
        common = np.broadcast_shapes(self.batch_shape, o.batch_shape)
        return Jet(self.K, self.N, self._aligned(common) + o._aligned(common))

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.K, self.N, -self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Jet):
            other = np.asarray(other, dtype=float)
            if not other.ndim:
                return Jet(self.K, self.N, self.coeffs * float(other))
            common = np.broadcast_shapes(self.batch_shape, other.shape)
            return Jet(self.K, self.N, self._aligned(common) * other[None])
        o = self._coerce(other)
        common = np.broadcast_shapes(self.batch_shape, o.batch_shape)
        _, _, I, J, T = _layout(self.K, self.N)
        prod = self._aligned(common)[I] * o._aligned(common)[J]
        out = np.zeros((self.coeffs.shape[0],) + prod.shape[1:])
        np.add.at(out, T, prod)
        return Jet(self.K, self.N, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.reciprocal()
        other = np.asarray(other, dtype=float)
        return self * (1.0 / other)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, e):
        if isinstance(e, int) and e >= 0:
            out = Jet.constant(self.K, self.N, np.ones(self.coeffs.shape[1:]))
            base = self
            while e:
                if e & 1:
                    out = out * base
                e >>= 1
                if e:
                    base = base * base
            return out
        e = float(e)
        a0 = self.value
        return self._compose([math.prod(e - i for i in range(k)) * a0 ** (e - k) for k in range(self.N + 1)])

    def _compose(self, derivs) -> "Jet":
        """f(self) from f^(k)(a0), k = 0..N."""
        h = Jet(self.K, self.N, self.coeffs.copy())
        h.coeffs[0] = 0.0
        out = Jet.constant(self.K, self.N, derivs[0])
        power = Jet.constant(self.K, self.N, np.ones(self.coeffs.shape[1:]))
        for k in range(1, self.N + 1):
            power = power * h
            out = out + power * (np.asarray(derivs[k]) / math.factorial(k))
        return out

    def compose(self, derivative: Callable[[int, np.ndarray], np.ndarray]) -> "Jet":
        return self._compose([derivative(k, self.value) for k in range(self.N + 1)])

    def exp(self):
        e = np.exp(self.value)
        return self._compose([e] * (self.N + 1))

    def log(self):
        a0 = self.value
        d = [np.log(a0)] + [(-1) ** (k - 1) * math.factorial(k - 1) * a0 ** (-k) for k in range(1, self.N + 1)]
        return self._compose(d)

    def sqrt(self):
        return self ** 0.5

    def reciprocal(self):
        return self ** -1.0

    def __repr__(self):
        return f"Jet(K={self.K}, N={self.N}, value={self.value})"


def exp(z):
    return z.exp() if isinstance(z, Jet) else np.exp(z)


def sqrt(z):
    return z.sqrt() if isinstance(z, Jet) else np.sqrt(z)


def log(z):
    return z.log() if isinstance(z, Jet) else np.log(z)
