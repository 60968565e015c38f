"""Concentrated delta distributions delta^(l)(g) on even superfunctions g."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from ..algebra.compose import DomainError
from ..algebra.dims import Dims
from ..algebra.superpoly import (SuperPolynomial, clifford_square, inner_product, joint_vectors,
                                 vector)


@dataclass(frozen=True)
class ConcentratedDelta:
    """sum_j (g_nil^j / j!) delta^(l+j)(g_0).

    ``terms`` lists ``(order, nilpotent coefficient)`` pairs; the bosonic
    factors delta^(order)(g_0) stay symbolic and are only ever paired with
    test functions (layer integrals on the sphere, p-derivatives for
    hyperplanes).
    """

    body: SuperPolynomial
    terms: Tuple[Tuple[int, SuperPolynomial], ...]
    family: Optional[str] = None

    @property
    def dims(self) -> Dims:
        return self.body.dims


def concentrated_delta(g: SuperPolynomial, ell: int = 0, family: Optional[str] = None) -> ConcentratedDelta:
    if not g.is_even():
        raise ValueError("concentrated deltas need an even argument")
    body, nil = g.body(), g.nilpotent()
    terms = []
    power = SuperPolynomial.constant(g.dims)
    for j in range(g.dims.nferm // 2 + 1):
        if j:
            power = power * nil
        if power.is_zero():
            break
        terms.append((ell + j, power * Fraction(1, math.factorial(j))))
    return ConcentratedDelta(body, tuple(terms), family)


def supersphere_delta(dims: Dims, ell: int = 0) -> ConcentratedDelta:
    """delta^(l)(x^2 + 1) = sum_j x`^(2j)/j! delta^(l+j)(1 - |x_bos|^2)."""
    if dims.m == 0:
        raise DomainError("the supersphere body 1 - |x|^2 needs m >= 1 (its gradient vanishes otherwise)")
    g = clifford_square(vector(dims)) + 1
    return concentrated_delta(g, ell, "supersphere")


def hyperplane_delta(dims: Dims, p=0, ell: int = 0, direction: Optional[Sequence[float]] = None
                     ) -> ConcentratedDelta:
    """delta^(l)(<x, w> - p) in the joint (x, w) space."""
    if dims.m == 0:
        raise DomainError("the hyperplane body <x, w> - p needs m >= 1")
    if direction is not None and not any(float(c) for c in direction):
        raise DomainError("the hyperplane direction has vanishing bosonic part")
    x, w = joint_vectors(dims, ("x", "w"))
    g = inner_product(x, w) - p
    return concentrated_delta(g, ell, "hyperplane")
