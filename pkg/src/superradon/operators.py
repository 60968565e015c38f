"""Super differential operators acting on superpolynomials.

All fermionic derivatives act from the left.  Operators accept an optional
``block`` (a :class:`SuperVector`) selecting which variables of a joint space
they act on; by default they act on all variables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra.clifford import WeylCliffordElement, vector_element
from .algebra.dims import Dims
from .algebra.gamma import rising
from .algebra.superpoly import SuperPolynomial, SuperVector, clifford_square, vector

KINDS = (
    "partial_bosonic", "partial_fermionic", "euler", "laplacian_bosonic",
    "laplacian_fermionic", "laplacian_super", "dirac_left", "dirac_right",
)


@dataclass(frozen=True)
class OperatorDescriptor:
    kind: str
    dims: Dims
    index: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown operator kind {self.kind!r}")
        if self.kind.startswith("partial") and self.index is None:
            raise ValueError("partial derivatives need an index")


def _block(F: SuperPolynomial, block: Optional[SuperVector]) -> SuperVector:
    if block is None:
        return vector(F.dims)
    if block.space != F.dims:
        raise ValueError("block does not live in the polynomial's space")
    return block


def partial_bosonic(F: SuperPolynomial, j: int, block: Optional[SuperVector] = None) -> SuperPolynomial:
    return F.d_bosonic(_block(F, block).bos_index(j))


def partial_fermionic(F: SuperPolynomial, j: int, block: Optional[SuperVector] = None) -> SuperPolynomial:
    return F.d_fermionic(_block(F, block).ferm_index(j))


def euler(F: SuperPolynomial, block: Optional[SuperVector] = None) -> SuperPolynomial:
    """sum x_j d/dx_j + sum x`_j d/dx`_j."""
    b = _block(F, block)
    out = SuperPolynomial.zero(F.dims)
    for j in range(1, b.dims.m + 1):
        out = out + b.bosonic(j) * partial_bosonic(F, j, b)
    for j in range(1, b.dims.nferm + 1):
        out = out + b.fermionic(j) * partial_fermionic(F, j, b)
    return out


def laplacian_bosonic(F: SuperPolynomial, block: Optional[SuperVector] = None) -> SuperPolynomial:
    b = _block(F, block)
    out = SuperPolynomial.zero(F.dims)
    for j in range(1, b.dims.m + 1):
        out = out + partial_bosonic(partial_bosonic(F, j, b), j, b)
    return out


def laplacian_fermionic(F: SuperPolynomial, block: Optional[SuperVector] = None) -> SuperPolynomial:
    """-4 sum d/dx`_{2j-1} d/dx`_{2j}."""
    b = _block(F, block)
    out = SuperPolynomial.zero(F.dims)
    for j in range(1, b.dims.n + 1):
        out = out + partial_fermionic(partial_fermionic(F, 2 * j, b), 2 * j - 1, b)
    return out * -4


def laplacian(F: SuperPolynomial, block: Optional[SuperVector] = None) -> SuperPolynomial:
    return laplacian_bosonic(F, block) + laplacian_fermionic(F, block)


def laplacian_power(F: SuperPolynomial, k: int, block: Optional[SuperVector] = None) -> SuperPolynomial:
    for _ in range(k):
        F = laplacian(F, block)
    return F


def _dirac_on_element(G: WeylCliffordElement) -> WeylCliffordElement:
    """Left super Dirac operator on a Weyl-Clifford valued superpolynomial."""
    dims = G.dims
    out = WeylCliffordElement(dims, cap=G.cap)
    for key, c in G.terms.items():
        for j in range(1, dims.n + 1):
            for gen, dj, sign in ((2 * j, 2 * j - 1, 2), (2 * j - 1, 2 * j, -2)):
                dc = c.d_fermionic(dj)
                if not dc.is_zero():
                    out = out + WeylCliffordElement.ef(dims, gen) * WeylCliffordElement(dims, {key: dc * sign}, G.cap)
        for j in range(1, dims.m + 1):
            dc = c.d_bosonic(j)
            if not dc.is_zero():
                out = out - WeylCliffordElement.e(dims, j) * WeylCliffordElement(dims, {key: dc}, G.cap)
    return out


def dirac(F) -> WeylCliffordElement:
    """Left Dirac operator d_x = d_x` - d_xbos, with
    d_x` = 2 sum (e`_{2j} d/dx`_{2j-1} - e`_{2j-1} d/dx`_{2j}) and d_xbos = sum e_j d/dx_j."""
    if isinstance(F, SuperPolynomial):
        F = WeylCliffordElement.scalar(F.dims, F)
    return _dirac_on_element(F)


def dirac_right(F: SuperPolynomial) -> WeylCliffordElement:
    """Right Dirac action F d_x = -F d_x` - F d_xbos, built from right derivatives."""
    dims = F.dims
    out = WeylCliffordElement(dims)
    for j in range(1, dims.n + 1):
        out = out - WeylCliffordElement.ef(dims, 2 * j) * (F.d_fermionic_right(2 * j - 1) * 2)
        out = out + WeylCliffordElement.ef(dims, 2 * j - 1) * (F.d_fermionic_right(2 * j) * 2)
    for j in range(1, dims.m + 1):
        out = out - WeylCliffordElement.e(dims, j) * F.d_bosonic(j)
    return out


def apply(op: OperatorDescriptor, F):
    """Apply a described operator to a SuperPolynomial (or a Gaussian-class function)."""
    if not isinstance(F, SuperPolynomial):
        return F.apply_operator(op)
    if F.dims != op.dims:
        raise ValueError("operator and polynomial dimensions differ")
    if op.kind == "partial_bosonic":
        return F.d_bosonic(op.index)
    if op.kind == "partial_fermionic":
        return F.d_fermionic(op.index)
    if op.kind == "euler":
        return euler(F)
    if op.kind == "laplacian_bosonic":
        return laplacian_bosonic(F)
    if op.kind == "laplacian_fermionic":
        return laplacian_fermionic(F)
    if op.kind == "laplacian_super":
        return laplacian(F)
    if op.kind == "dirac_left":
        return dirac(F)
    return dirac_right(F)


def laplacian_power_norm(dims: Dims, j: int, ell: int):
    """Closed form of Delta^j [x^(2 ell)] with x^2 = -|x|^2.

    Returns ``(coefficient, x^(2 ell - 2 j))``; the coefficient is
    (-4)^j ell!/(ell-j)! * Gamma(M/2+ell)/Gamma(M/2+ell-j), a rational.
    """
    x2 = clifford_square(vector(dims))
    if j > ell:
        return Fraction(0), SuperPolynomial.zero(dims)
    coeff = Fraction((-4) ** j * math.factorial(ell), math.factorial(ell - j))
    coeff *= rising(Fraction(dims.M, 2) + ell - j, j)
    return coeff, x2 ** (ell - j)


def clifford_multiply_vector(G: WeylCliffordElement) -> WeylCliffordElement:
    """Left multiplication by the supervector x."""
    return vector_element(G.dims) * G


def dirac_anticommutator_check(dims: Dims, F: SuperPolynomial) -> SuperPolynomial:
    """(d_x x + x d_x)[F] via the Weyl-Clifford product; must be 2(E + M/2) F."""
    G = WeylCliffordElement.scalar(dims, F)
    result = dirac(clifford_multiply_vector(G)) + clifford_multiply_vector(dirac(G))
    if not result.is_scalar():
        raise ArithmeticError(f"anticommutator is not scalar: {result.to_text()}")
    return result.scalar_part()


def dirac_square(F: SuperPolynomial) -> WeylCliffordElement:
    return dirac(dirac(F))


# sl2 generators ------------------------------------------------------------------

def half_laplacian(F: SuperPolynomial) -> SuperPolynomial:
    return laplacian(F) * Fraction(1, 2)


def minus_half_x2(F: SuperPolynomial) -> SuperPolynomial:
    return clifford_square(vector(F.dims)) * F * Fraction(-1, 2)


def shifted_euler(F: SuperPolynomial) -> SuperPolynomial:
    """E + M/2."""
    return euler(F) + F * Fraction(F.dims.M, 2)


def commutator(A, B, F):
    return A(B(F)) - B(A(F))
