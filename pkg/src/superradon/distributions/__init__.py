"""Generalized functions on the line and radial superdistributions."""

from .concentrated import ConcentratedDelta, concentrated_delta, hyperplane_delta, supersphere_delta
from .kernel1d import (FAMILIES, Kernel1D, ResidueDescriptor, mellin_pairing, pair_kernel_1d,
                       principal_value_inverse, residue_1d)
from .logprim import LogPrimitive, log_primitive_coeff, log_primitive_coeff_harmonic, log_primitive_eval
from .superkernels import (DeltaExpansion, FundamentalSolutionCheck, RadialExpansion, RieszKernel,
                           SuperResidue, UnsupportedCase, chu_vandermonde_sum,
                           coefficient_system_residuals, frac_laplacian_fundamental_coeffs,
                           fundamental_solution_check, fundamental_solution_expansion,
                           inverse_riesz_normalization, normalized_power_at_pole, radial_coefficient,
                           radial_coefficient_falling, riesz_kernel, riesz_laplacian_step,
                           riesz_normalization, super_delta_laplacian, super_norm_residue, super_power)
from .testfunc import CallableTestFunction, PolyGaussian1D, TestFunction1D, gaussian

__all__ = [
    "CallableTestFunction", "ConcentratedDelta", "DeltaExpansion", "FAMILIES", "FundamentalSolutionCheck",
    "Kernel1D", "LogPrimitive", "PolyGaussian1D", "RadialExpansion", "ResidueDescriptor", "RieszKernel",
    "SuperResidue", "TestFunction1D", "UnsupportedCase", "chu_vandermonde_sum",
    "coefficient_system_residuals", "concentrated_delta", "frac_laplacian_fundamental_coeffs",
    "fundamental_solution_check", "fundamental_solution_expansion", "gaussian", "hyperplane_delta",
    "inverse_riesz_normalization", "log_primitive_coeff", "log_primitive_coeff_harmonic",
    "log_primitive_eval", "mellin_pairing", "normalized_power_at_pole", "pair_kernel_1d",
    "principal_value_inverse", "radial_coefficient", "radial_coefficient_falling", "residue_1d",
    "riesz_kernel", "riesz_laplacian_step", "riesz_normalization", "super_delta_laplacian",
    "super_norm_residue", "super_power", "supersphere_delta",
]
