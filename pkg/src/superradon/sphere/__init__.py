"""Supersphere integration: quadrature, Pizzetti, delta route, Funk-Hecke."""

from .integrals import (Component, ContractViolation, FermionicLayerTerm, HomogeneousComponent,
                        PolynomialComponent, SmoothComponent, SphereIntegrand, eval_poly, funk_hecke,
                        funk_hecke_sides, harmonics, layer_weights, lemma_L3_pairing, normalized_integral,
                        pizzetti, radial_composition, supersphere_integral,
                        supersphere_integral_delta_route)
from .quadrature import (DEFAULT_DEGREE, SphereQuadrature, load_quadrature, save_quadrature,
                         sphere_area_float, sphere_quadrature)

__all__ = [
    "Component", "ContractViolation", "DEFAULT_DEGREE", "FermionicLayerTerm", "HomogeneousComponent",
    "PolynomialComponent", "SmoothComponent", "SphereIntegrand", "SphereQuadrature", "eval_poly",
    "funk_hecke", "funk_hecke_sides", "harmonics", "layer_weights", "lemma_L3_pairing",
    "load_quadrature", "normalized_integral", "pizzetti", "radial_composition", "save_quadrature",
    "sphere_area_float", "sphere_quadrature", "supersphere_integral", "supersphere_integral_delta_route",
]
