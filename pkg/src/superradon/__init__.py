"""Super Radon transform, its inversion and the supporting harmonic analysis in superspace R^(m|2n)."""

from .algebra import Dims, GrassmannElement, Scalar, SuperPolynomial
from .literal import parse_polynomial
from .radon import GaussianSuperFunction, dual_radon, invert, radon_transform

__version__ = "0.1.0"

__all__ = ["Dims", "GaussianSuperFunction", "GrassmannElement", "Scalar", "SuperPolynomial", "dual_radon",
           "invert", "parse_polynomial", "radon_transform"]
