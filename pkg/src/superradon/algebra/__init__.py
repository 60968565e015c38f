"""Exact scalars, Grassmann algebra, superpolynomials and the Weyl-Clifford algebra."""

from .clifford import WeylCliffordElement, symplectic_form, vector_element
from .compose import CompositionSeries, DomainError, generalized_power, taylor_compose, taylor_terms
from .dims import Dims
from .gamma import (PoleError, falling, falling_derivative, gamma_exact, gamma_ratio,
                    harmonic_number, rgamma_exact, rising, sphere_area)
from .grassmann import GrassmannElement, berezin, bits, mask_of, merge_sign
from .scalar import PI, Scalar, as_scalar
from .superpoly import (SuperPolynomial, SuperVector, clifford_square, fermionic_square,
                        inner_product, joint_vectors, norm_squared, vector)


def grassmann_mul(a: GrassmannElement, b: GrassmannElement) -> GrassmannElement:
    return a * b


def superpoly_mul(a: SuperPolynomial, b: SuperPolynomial) -> SuperPolynomial:
    return a * b


def weyl_clifford_mul(a: WeylCliffordElement, b: WeylCliffordElement) -> WeylCliffordElement:
    return a * b


def berezin_integral(a, dims: Dims | None = None):
    """Berezin integral over all 2n fermionic variables.

    Accepts a GrassmannElement (returns a scalar) or a SuperPolynomial
    (returns the bosonic polynomial multiplying the top monomial, times pi^-n,
    as a SuperPolynomial without fermionic part).
    """
    if isinstance(a, GrassmannElement):
        if dims is not None and a.ngen != dims.nferm:
            raise ValueError("dimension mismatch")
        if a.ngen == 0:
            return a.body()
        return berezin(a)
    dims = a.dims if dims is None else dims
    if a.dims != dims:
        raise ValueError("dimension mismatch")
    top = (1 << dims.nferm) - 1
    out = {}
    for (alpha, mask), c in a.terms.items():
        if mask == top:
            g = berezin(GrassmannElement(dims.nferm, {mask: c})) if dims.nferm else c
            out[(alpha, 0)] = g
    return SuperPolynomial(dims, out)


__all__ = [
    "CompositionSeries", "Dims", "DomainError", "GrassmannElement", "PI", "PoleError", "Scalar",
    "SuperPolynomial", "SuperVector", "WeylCliffordElement", "as_scalar", "berezin",
    "berezin_integral", "bits", "clifford_square", "falling", "falling_derivative",
    "fermionic_square", "gamma_exact", "gamma_ratio", "generalized_power", "grassmann_mul",
    "harmonic_number", "inner_product", "joint_vectors", "mask_of", "merge_sign", "norm_squared",
    "rgamma_exact", "rising", "sphere_area", "superpoly_mul", "symplectic_form", "taylor_compose",
    "taylor_terms", "vector", "vector_element", "weyl_clifford_mul",
]
