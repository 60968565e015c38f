import math
import warnings
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from scipy import integrate

from superradon.algebra import Dims
from superradon.algebra.compose import DomainError
from superradon.distributions import Kernel1D, log_primitive_coeff, log_primitive_eval
from superradon.planewave import (PlaneWaveIdentityCase, cauchy_boundary_check, cauchy_scalar_jump,
                                  directional_pairing, higher_cauchy_jump, laplacian_at_origin, layer_moment,
                                  log_layer_moment, polyharmonic_constant, polyharmonic_jump,
                                  radial_power_pairing, richardson, standard_test_functions, verify_pw_identity)
from superradon.radon import GaussianSuperFunction
from superradon.sphere import sphere_quadrature

CASES = [
    (PlaneWaveIdentityCase("PWDelRm_even", 2), 1e-3),
    (PlaneWaveIdentityCase("PWDelRm_odd", 3), 1e-3),
    (PlaneWaveIdentityCase("PWRLan", 2, lam=1), 1e-6),
    (PlaneWaveIdentityCase("PWRLan", 2, lam=Fraction(1, 2)), 1e-6),
    (PlaneWaveIdentityCase("PWRLan", 2, lam=Fraction(-1, 2)), 1e-6),
    (PlaneWaveIdentityCase("PWRLan", 3, lam=Fraction(1, 2)), 1e-6),
    (PlaneWaveIdentityCase("PWDelRm_even", 4), 1e-3),
    (PlaneWaveIdentityCase("PrincEven", 2, ell=1), 1e-3),
    (PlaneWaveIdentityCase("PrincOdd", 3, ell=1), 1e-3),
]


def _dbl(f, a, b):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        return integrate.dblquad(f, a, b, a, b, epsabs=1e-11, epsrel=1e-11)[0]


@pytest.mark.parametrize("case,tol", CASES, ids=lambda c: getattr(c, "identity", None) and
                         f"{c.identity}-m{c.m}-lam{c.lam}-l{c.ell}")
def test_identity_on_standard_functions(case, tol):
    for name, phi in standard_test_functions(case.m):
        res = verify_pw_identity(case, phi, sphere_quadrature(case.m, 32))
        assert res.rel_err <= tol, name


def test_case_validation():
    with pytest.raises(ValueError):
        PlaneWaveIdentityCase("PWDelRm_even", 3)
    with pytest.raises(ValueError):
        PlaneWaveIdentityCase("PrincOdd", 2)
    with pytest.raises(ValueError):
        PlaneWaveIdentityCase("PWRLan", 2)
    with pytest.raises(ValueError):
        PlaneWaveIdentityCase("Curl", 2)


def test_directional_pairing_of_abs_against_plane_integral():
    # int_S |<x, w>| dS_w = 4 |x| in the plane
    _, phi = standard_test_functions(2)[2]
    got = directional_pairing(Kernel1D("abs_pow", 1), phi, sphere_quadrature(2, 40))
    brute = _dbl(lambda y, x: 4 * math.hypot(x, y) * phi.value_at((x, y)).body(), -12, 12)
    assert got == pytest.approx(brute, rel=1e-8)


def test_radial_power_pairing_against_plane_integral():
    _, phi = standard_test_functions(2)[1]
    got = radial_power_pairing(phi, Fraction(1, 2))
    brute = _dbl(lambda y, x: math.hypot(x, y) ** 0.5 * phi.value_at((x, y)).body(), -12, 12)
    assert got == pytest.approx(brute, rel=1e-8)
    with pytest.raises(DomainError):
        radial_power_pairing(phi, -2)


@pytest.mark.parametrize("m", [2, 3])
def test_laplacian_at_origin_by_finite_differences(m):
    for _, phi in standard_test_functions(m):
        h = 1e-3
        f = lambda x: phi.value_at(x).body()
        zero = np.zeros(m)
        fd = sum((f(zero + h * e) - 2 * f(zero) + f(zero - h * e)) / h ** 2 for e in np.eye(m))
        assert laplacian_at_origin(phi, 1) == pytest.approx(fd, abs=1e-5)
        assert laplacian_at_origin(phi, 0) == pytest.approx(f(zero))


# boundary values --------------------------------------------------------------------

def test_richardson_is_exact_on_polynomials():
    h = [0.2, 0.1, 0.05]
    assert richardson(h, [3 + 2 * x - x * x for x in h]) == pytest.approx(3.0)


def test_poisson_kernel_has_unit_mass():
    # the jump kernel is minus the half-space Poisson kernel, which has unit mass for every x0
    s3 = 4 * math.pi
    for x0 in (0.3, 0.05):
        mass = integrate.quad(lambda r: 2 * math.pi * r * 2 * x0 / (s3 * (x0 * x0 + r * r) ** 1.5), 0, np.inf)[0]
        assert mass == pytest.approx(1.0, rel=1e-10)


def test_cauchy_jump_against_plane_integral():
    _, phi = standard_test_functions(2)[2]
    x0 = 0.2
    got = cauchy_scalar_jump(phi, x0)
    brute = _dbl(lambda y, x: -2 * x0 / (4 * math.pi * (x0 * x0 + x * x + y * y) ** 1.5)
                 * phi.value_at((x, y)).body(), -12, 12)
    assert got == pytest.approx(brute, rel=1e-7)


@pytest.mark.parametrize("m,tol", [(1, 1e-3), (2, 1e-2), (3, 1e-2)])
def test_cauchy_boundary_value_is_minus_phi(m, tol):
    for name, phi in standard_test_functions(m):
        b = cauchy_boundary_check(m, phi)
        assert b.target == pytest.approx(-phi.value_at((0.0,) * m).body())
        assert b.abs_err <= tol, name


def test_cauchy_boundary_rejects_super_inputs():
    with pytest.raises(ValueError):
        cauchy_boundary_check(2, GaussianSuperFunction.gaussian(Dims(2, 1)))


def test_polyharmonic_jump_vanishes():
    for _, phi in standard_test_functions(3):
        assert abs(polyharmonic_jump(3, phi, 0).limit) <= 1e-3


def test_polyharmonic_constant_gives_the_newton_kernel():
    # c(3, 1) |x|^-1 is the fundamental solution -1/(4 pi |x|) of the Laplacian in R^3
    assert polyharmonic_constant(3, 1) == pytest.approx(-1 / (4 * math.pi))


def test_higher_cauchy_jump_is_exploratory():
    for _, phi in standard_test_functions(3):
        b = higher_cauchy_jump(3, phi, 1)
        assert b.exploratory
        assert abs(b.limit) <= 1e-3


# layer integrals and log primitives ------------------------------------------------------

T = sp.symbols("t", positive=True)


@pytest.mark.parametrize("j", range(9))
def test_layer_moment_against_sympy(j):
    # t = r^2: int delta^(j)(1 - t) t^(j-1) / 2 dt = (1/2) d^j/dt^j t^(j-1) at t = 1
    oracle = sp.diff(T ** (j - 1) / 2, T, j).subs(T, 1)
    assert layer_moment(j) == Fraction(int(sp.numer(oracle)), int(sp.denom(oracle)))
    assert layer_moment(j) == (Fraction(1, 2) if j == 0 else 0)


@pytest.mark.parametrize("j", range(1, 9))
def test_log_layer_moment_against_sympy(j):
    oracle = sp.diff(T ** (j - 1) * sp.log(T) / 4, T, j).subs(T, 1)
    assert log_layer_moment(j) == Fraction(int(sp.numer(oracle)), int(sp.denom(oracle)))
    assert log_layer_moment(j) == Fraction(math.factorial(j - 1), 4)


@pytest.mark.parametrize("ell", range(11))
def test_log_primitive_coefficient_is_harmonic_over_factorial(ell):
    oracle = sp.harmonic(ell) / sp.factorial(ell)
    assert log_primitive_coeff(ell) == Fraction(int(sp.numer(oracle)), int(sp.denom(oracle)))


@pytest.mark.parametrize("ell", range(10))
def test_log_primitive_chain_symbolic(ell):
    z = sp.symbols("z", positive=True)
    a = lambda k: sp.Rational(log_primitive_coeff(k).numerator, log_primitive_coeff(k).denominator)
    G = lambda k: z ** k / sp.factorial(k) * sp.log(z) - a(k) * z ** k
    assert sp.simplify(sp.diff(G(ell + 1), z) - G(ell)) == 0
    pts = np.array([0.3, 1.7])
    h = 1e-4
    num = (log_primitive_eval(ell + 1, pts + h) - log_primitive_eval(ell + 1, pts - h)) / (2 * h)
    assert np.max(np.abs(num - log_primitive_eval(ell, pts))) <= 1e-6


def test_standard_functions_are_bosonic_and_distinct():
    fns = standard_test_functions(3)
    assert [n for n, _ in fns] == ["gaussian", "x1^2 gaussian", "shifted gaussian"]
    vals = {round(phi.value_at((0.1, 0.2, 0.3)).body(), 12) for _, phi in fns}
    assert len(vals) == 3
    assert all(phi.dims == Dims(3, 0) for _, phi in fns)
