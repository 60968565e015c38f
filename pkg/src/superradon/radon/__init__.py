"""Super Radon transform on the Gaussian class, its dual and the inversion drivers."""

from .backprojection import (BackprojectionPair, backprojection_identity, backprojection_rhs, delta_pairing,
                             inverse_distance_pairing, pwrk_weak_check)
from .dual import MonomialProfile, SupervectorPoint, dual_radon, fermionic_pairing
from .gaussian import GaussianSuperFunction, gaussian_moment, hermite_coeffs, hermite_values
from .inversion import (FermionicInversion, InversionRecord, grassmann_error, invert, invert_fermionic,
                        invert_negative_even, inversion_case, inversion_report, laplacian_moment_oracle,
                        laplacian_prefactor, laplacian_term, log_kernel_term, reference_value)
from .transform import (RadonData, bosonic_radon_numeric, central_slice_check, fermionic_delta_weights,
                        pair_kernel_radon, radon_polynomials, radon_transform, shift_expansion)

__all__ = [
    "BackprojectionPair", "FermionicInversion", "GaussianSuperFunction", "InversionRecord", "MonomialProfile",
    "RadonData", "SupervectorPoint", "backprojection_identity", "backprojection_rhs", "bosonic_radon_numeric",
    "central_slice_check", "delta_pairing", "dual_radon", "fermionic_delta_weights", "fermionic_pairing",
    "gaussian_moment", "grassmann_error", "hermite_coeffs", "hermite_values", "inverse_distance_pairing",
    "invert", "invert_fermionic", "invert_negative_even", "inversion_case", "inversion_report",
    "laplacian_moment_oracle", "laplacian_prefactor", "laplacian_term", "log_kernel_term", "pair_kernel_radon",
    "pwrk_weak_check", "radon_polynomials", "radon_transform", "reference_value", "shift_expansion",
]
