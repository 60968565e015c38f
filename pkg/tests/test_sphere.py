import itertools
import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings

from conftest import superpolynomials
from superradon import jet
from superradon.algebra import Dims, Scalar, SuperPolynomial, clifford_square, sphere_area, vector
from superradon.algebra.compose import DomainError
from superradon.sphere import (ContractViolation, funk_hecke, funk_hecke_sides, harmonics, lemma_L3_pairing,
                               load_quadrature, normalized_integral, pizzetti, radial_composition,
                               save_quadrature, sphere_area_float, sphere_quadrature,
                               supersphere_integral_delta_route)
from superradon.suites import random_polynomial


def _monomial_sphere_integral(alpha):
    """int_S^(m-1) x^alpha dS = 2 prod Gamma((a_i+1)/2) / Gamma((|a|+m)/2), zero for odd a_i."""
    if any(a % 2 for a in alpha):
        return 0.0
    num = mpmath.mpf(2)
    for a in alpha:
        num *= mpmath.gamma(mpmath.mpf(a + 1) / 2)
    return float(num / mpmath.gamma(mpmath.mpf(sum(alpha) + len(alpha)) / 2))


# quadrature -------------------------------------------------------------------------

@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_quadrature_exact_on_monomials(m):
    deg = 8
    q = sphere_quadrature(m, deg)
    for alpha in itertools.product(range(deg + 1), repeat=m):
        if sum(alpha) > deg:
            continue
        vals = np.prod([q.nodes[:, i] ** a for i, a in enumerate(alpha)], axis=0)
        assert float(q.integrate(vals)) == pytest.approx(_monomial_sphere_integral(alpha), abs=1e-12)


@pytest.mark.parametrize("m", [1, 2, 3, 5])
def test_quadrature_total_weight_and_unit_nodes(m):
    q = sphere_quadrature(m, 6)
    assert q.weights.sum() == pytest.approx(sphere_area_float(m))
    assert np.allclose(np.linalg.norm(q.nodes, axis=1), 1.0)


def test_quadrature_roundtrip(tmp_path):
    q = sphere_quadrature(3, 6)
    path = tmp_path / "rule.txt"
    save_quadrature(q, path)
    back = load_quadrature(path, 6)
    assert np.array_equal(back.nodes, q.nodes) and np.array_equal(back.weights, q.weights)
    path.write_text("# weight x y\n1.0 0.5 0.5\n")
    with pytest.raises(ValueError):
        load_quadrature(path)


# Pizzetti --------------------------------------------------------------------

@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_pizzetti_bosonic_matches_gamma_formula(m):
    for alpha in itertools.product(range(5), repeat=m):
        if sum(alpha) > 6:
            continue
        P = SuperPolynomial.monomial(Dims(m, 0), alpha, 0, 1)
        assert float(pizzetti(P)) == pytest.approx(_monomial_sphere_integral(alpha), abs=1e-13)


@pytest.mark.parametrize("M", range(-6, 7))
def test_pizzetti_of_one_is_area(M):
    n = 3
    m = M + 2 * n
    if m < 0:
        pytest.skip("needs m >= 0")
    assert pizzetti(SuperPolynomial.constant(Dims(m, n))) == sphere_area(M)


@pytest.mark.parametrize("dims", [Dims(2, 1), Dims(3, 1), Dims(2, 2)], ids=str)
def test_pizzetti_equals_delta_route(dims):
    rng = np.random.default_rng([7, dims.m, dims.n])
    quad = sphere_quadrature(dims.m, 16)
    for _ in range(50):
        P = random_polynomial(dims, rng)
        exact = float(pizzetti(P))
        delta = supersphere_integral_delta_route(P, quad=quad)
        assert delta == pytest.approx(exact, rel=1e-8, abs=1e-12)


def test_pizzetti_fermionic_pair_at_negative_M():
    # every term of the expansion carries 1/Gamma at a pole
    d = Dims(0, 1)
    P = SuperPolynomial.fermionic(d, 1) * SuperPolynomial.fermionic(d, 2)
    assert pizzetti(P) == 0
    assert normalized_integral(P) == -1


@settings(max_examples=30)
@given(superpolynomials(Dims(2, 1), max_degree=4))
def test_pizzetti_is_invariant_under_rotation_of_the_plane(P):
    # rotate the plane by 90 degrees: x1^a x2^b -> (-x2)^a x1^b
    rotated = SuperPolynomial.zero(P.dims)
    for ((a, b), mask), c in P.items():
        rotated = rotated + SuperPolynomial.monomial(P.dims, (b, a), mask, c * (-1) ** a)
    assert pizzetti(rotated) == pizzetti(P)


# radial composition ---------------------------------------------------------------

@pytest.mark.parametrize("dims", [Dims(2, 1), Dims(3, 1), Dims(2, 2)], ids=str)
@pytest.mark.parametrize("name,f,f1", [("t^4", lambda t: t ** 4, 1.0), ("exp(t-1)", lambda t: jet.exp(t - 1), 1.0)])
def test_radial_factor_on_sphere_is_its_value_at_one(dims, name, f, f1):
    rng = np.random.default_rng([11, dims.m, dims.n])
    quad = sphere_quadrature(dims.m, 16)
    for _ in range(5):
        P = random_polynomial(dims, rng, max_degree=4)
        got = supersphere_integral_delta_route(radial_composition(f, P), quad=quad)
        assert got == pytest.approx(f1 * float(pizzetti(P)), rel=1e-8, abs=1e-10)


# Funk-Hecke -----------------------------------------------------------------------

FH_DIMS = [Dims(3, 0), Dims(2, 1), Dims(3, 1), Dims(2, 2)]


@pytest.mark.parametrize("dims", FH_DIMS, ids=str)
def test_funk_hecke_sides_agree(dims):
    for H in harmonics(dims, 3):
        for j in range(7):
            lhs, rhs = funk_hecke_sides(dims, j, H)
            assert lhs == rhs


@pytest.mark.parametrize("dims", FH_DIMS, ids=str)
def test_funk_hecke_zero_rule(dims):
    for H in harmonics(dims, 3):
        ell = H.degree()
        for j in range(7):
            alpha = funk_hecke(dims, j, H)
            assert (alpha == 0) == ((j + ell) % 2 == 1 or j < ell or
                                    rgamma_zero(dims.M, j, ell))


def rgamma_zero(M, j, ell):
    z = Fraction(M + j + ell, 2)
    return z.denominator == 1 and z <= 0


def test_funk_hecke_bosonic_matches_classical_value():
    # m = 3, H = 1: int <x, w>^2 dS = 4 pi/3 |x|^2
    d = Dims(3, 0)
    assert funk_hecke(d, 2, SuperPolynomial.constant(d)) == Scalar(Fraction(4, 3), 2)


@pytest.mark.parametrize("dims", [Dims(0, 1), Dims(2, 2), Dims(2, 3), Dims(0, 2)], ids=str)
def test_normalized_funk_hecke_sides(dims):
    k = -dims.M // 2
    for H in harmonics(dims, 3):
        for j in range(2 * k + 2 - H.degree()):
            lhs, rhs = funk_hecke_sides(dims, j, H, normalized=True)
            assert lhs == rhs


def test_funk_hecke_contracts():
    d = Dims(2, 1)
    with pytest.raises(ContractViolation):
        funk_hecke(d, 2, SuperPolynomial.bosonic(d, 1) ** 2)
    with pytest.raises(DomainError):
        funk_hecke(Dims(3, 1), 2, SuperPolynomial.constant(Dims(3, 1)), normalized=True)
    with pytest.raises(ContractViolation):
        funk_hecke(Dims(0, 1), 4, SuperPolynomial.constant(Dims(0, 1)), normalized=True)


# normalized integral ----------------------------------------------------------------

NORM_DIMS = [Dims(0, 1), Dims(2, 2), Dims(0, 2), Dims(2, 3), Dims(0, 3)]


def _homogeneous(dims, deg, rng):
    P = SuperPolynomial.zero(dims)
    while P.is_zero():
        P = random_polynomial(dims, rng, max_degree=deg, max_terms=8).homogeneous_part(deg)
    return P


@pytest.mark.parametrize("dims", NORM_DIMS, ids=str)
def test_normalized_integral_absorbs_square(dims):
    k = -dims.M // 2
    x2 = clifford_square(vector(dims))
    rng = np.random.default_rng([5, dims.m, dims.n])
    for j in range(k + 1):
        R = _homogeneous(dims, 2 * j, rng) if j else SuperPolynomial.constant(dims, 3)
        base = normalized_integral(R)
        for ell in range(k - j + 1):
            assert normalized_integral(x2 ** ell * R) == (-1) ** ell * base


def test_normalized_integral_degree_contract():
    d = Dims(0, 1)
    ok = SuperPolynomial.fermionic(d, 1) * SuperPolynomial.fermionic(d, 2)
    assert normalized_integral(ok) == -1
    d2 = Dims(2, 2)
    with pytest.raises(ContractViolation):
        normalized_integral(SuperPolynomial.bosonic(d2, 1) ** 4)
    with pytest.raises(DomainError):
        normalized_integral(SuperPolynomial.constant(Dims(3, 1)))


def test_normalized_integral_of_one():
    for n in (1, 2, 3):
        assert normalized_integral(SuperPolynomial.constant(Dims(0, n))) == 1


# fermionic layer reduction ------------------------------------------------------------

def test_fermionic_layer_odd_power_vanishes():
    assert lemma_L3_pairing(Dims(3, 1), 1).vanishes
    t = lemma_L3_pairing(Dims(3, 1), 2)
    assert not t.vanishes and t.layer_order == 0


def test_fermionic_layer_bosonic_factor_with_smooth_g():
    # g = 1: the layer of order n - j of the constant on S^2 is (1/2) falling((m-2)/2, n-j) |S^2|
    d = Dims(3, 2)
    t = lemma_L3_pairing(d, 2, g=lambda s: 1.0 + 0 * s, x=(0.1, 0.2, 0.3), quad=sphere_quadrature(3, 8))
    assert t.layer_order == 1
    assert t.bosonic == pytest.approx(0.5 * 0.5 * 4 * math.pi)
