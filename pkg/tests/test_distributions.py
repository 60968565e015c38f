import math
import warnings
from fractions import Fraction

import mpmath
import numpy as np
import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate

from conftest import rationals
from superradon.algebra import Dims, PoleError, Scalar, clifford_square, vector
from superradon.algebra.compose import DomainError
from superradon.distributions import (CallableTestFunction, Kernel1D, LogPrimitive, UnsupportedCase,
                                      chu_vandermonde_sum, coefficient_system_residuals, concentrated_delta,
                                      fundamental_solution_check, fundamental_solution_expansion, gaussian,
                                      hyperplane_delta, log_primitive_coeff, log_primitive_coeff_harmonic,
                                      pair_kernel_1d, principal_value_inverse, radial_coefficient,
                                      radial_coefficient_falling, residue_1d, riesz_kernel, riesz_laplacian_step,
                                      riesz_normalization, super_norm_residue, super_power, supersphere_delta)
from superradon.operators import laplacian

PHIS = [gaussian(0.3), gaussian(-0.4, 2.0, (1.0, 0.5, -0.2)), gaussian(0.1, 0.7, (0.0, 1.0))]


def _quad(f, a, b):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        return integrate.quad(f, a, b, epsabs=1e-13, epsrel=1e-13, limit=400)[0]


# test functions -----------------------------------------------------------------

@pytest.mark.parametrize("phi", PHIS)
def test_polygaussian_derivative_by_finite_difference(phi):
    h = 1e-5
    for t in (-0.7, 0.0, 1.3):
        fd = (phi(t + h) - phi(t - h)) / (2 * h)
        assert phi.derivative()(t) == pytest.approx(fd, abs=1e-8)


@pytest.mark.parametrize("phi", PHIS)
def test_polygaussian_closed_forms(phi):
    assert phi.integral() == pytest.approx(_quad(phi, -np.inf, np.inf), rel=1e-11)
    assert phi.moment(3, 0.2) == pytest.approx(_quad(lambda t: (t - 0.2) ** 3 * phi(t), -np.inf, np.inf),
                                               abs=1e-11)
    r = 1.7
    re = _quad(lambda t: math.cos(r * t) * phi(t), -np.inf, np.inf)
    im = -_quad(lambda t: math.sin(r * t) * phi(t), -np.inf, np.inf)
    assert phi.fourier(r) == pytest.approx(complex(re, im), abs=1e-11)


def test_callable_test_function_limits_derivatives():
    f = CallableTestFunction([math.exp, math.exp])
    assert f.derivative()(0.0) == 1.0
    with pytest.raises(ValueError):
        f.derivative(2)


# homogeneous kernels on the line -------------------------------------------------

@pytest.mark.parametrize("phi", PHIS)
@pytest.mark.parametrize("lam", [0.5, 0.0, -0.5, 2.25])
def test_t_plus_locally_integrable(phi, lam):
    assert pair_kernel_1d(Kernel1D("t_plus", lam), phi) == pytest.approx(
        _quad(lambda t: t ** lam * phi(t), 0, np.inf), rel=1e-9)
    assert pair_kernel_1d(Kernel1D("t_minus", lam), phi) == pytest.approx(
        _quad(lambda t: t ** lam * phi(-t), 0, np.inf), rel=1e-9)


@pytest.mark.parametrize("phi", PHIS)
@pytest.mark.parametrize("lam", [-1.5, -2.5, -3.25, -4.75])
def test_t_plus_continuation_by_parts(phi, lam):
    # <t_+^lam, phi> = -<t_+^(lam+1), phi'> / (lam + 1), iterated into the integrable range
    k = math.floor(-lam)
    mu = lam + k
    f = phi.derivative(k)
    val = _quad(lambda t: t ** mu * f(t), 0, np.inf)
    for i in range(k):
        val *= -1.0 / (mu - i)
    assert pair_kernel_1d(Kernel1D("t_plus", lam), phi) == pytest.approx(val, rel=1e-8)


@pytest.mark.parametrize("phi", PHIS)
@pytest.mark.parametrize("lam", [-0.5, -1.5, -2.5, 0.75])
def test_even_and_odd_powers_split(phi, lam):
    plus = pair_kernel_1d(Kernel1D("t_plus", lam), phi)
    minus = pair_kernel_1d(Kernel1D("t_minus", lam), phi)
    assert pair_kernel_1d(Kernel1D("abs_pow", lam), phi) == pytest.approx(plus + minus, rel=1e-10, abs=1e-12)
    assert pair_kernel_1d(Kernel1D("sgn_abs_pow", lam), phi) == pytest.approx(plus - minus, rel=1e-10,
                                                                              abs=1e-12)


@pytest.mark.parametrize("family,ell", [("t_plus", 1), ("t_plus", 2), ("t_plus", 3), ("t_minus", 1),
                                        ("t_minus", 2), ("abs_pow", 0), ("abs_pow", 1), ("abs_pow", 2),
                                        ("sgn_abs_pow", 1), ("sgn_abs_pow", 2)])
@pytest.mark.parametrize("phi", PHIS)
def test_pole_residue_is_the_limit(family, ell, phi):
    res = residue_1d(family, ell)
    eps = 1e-6
    vals = [(lam - res.pole) * pair_kernel_1d(Kernel1D(family, lam), phi, tol=1e-13)
            for lam in (res.pole + eps, res.pole - eps)]
    target = res.pair(phi)
    for v in vals:
        assert v == pytest.approx(target, abs=1e-4)
    with pytest.raises(PoleError):
        pair_kernel_1d(Kernel1D(family, res.pole), phi)


def test_even_power_at_odd_negative_integer_is_a_pole_but_not_at_even():
    phi = PHIS[0]
    with pytest.raises(PoleError):
        pair_kernel_1d(Kernel1D("abs_pow", -3), phi)
    # |t|^-2 has no pole: Hadamard finite part
    fp = _quad(lambda t: (phi(t) + phi(-t) - 2 * phi(0.0)) / t ** 2, 0, 1) \
        + _quad(lambda t: (phi(t) + phi(-t)) / t ** 2, 1, np.inf) - 2 * phi(0.0)
    assert pair_kernel_1d(Kernel1D("abs_pow", -2), phi) == pytest.approx(fp, rel=1e-8)


@pytest.mark.parametrize("k", range(5))
def test_delta_derivative(k):
    phi = gaussian(0.0)
    # derivatives of exp(-t^2/2) at 0 are Hermite values
    herm = [1.0, 0.0, -1.0, 0.0, 3.0]
    assert pair_kernel_1d(Kernel1D("delta_derivative", order=k), phi) == pytest.approx((-1) ** k * herm[k])


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        Kernel1D("t_sideways", 1)
    with pytest.raises(ValueError):
        residue_1d("t_plus", 0)


@pytest.mark.parametrize("phi", PHIS)
def test_principal_value_against_cauchy_weight(phi):
    oracle = integrate.quad(phi, -40, 40, weight="cauchy", wvar=0.0, epsabs=1e-13)[0]
    assert principal_value_inverse(phi) == pytest.approx(oracle, abs=1e-10)
    d = phi.derivatives_at(0.0, 40)
    assert principal_value_inverse(phi, deriv0=lambda j: d[j]) == pytest.approx(oracle, abs=1e-10)


# radial superdistributions ------------------------------------------------------

@given(rationals, st.integers(0, 4))
def test_radial_coefficient_two_forms(lam, j):
    assert radial_coefficient(lam, j) == radial_coefficient_falling(lam, j)


@pytest.mark.parametrize("lam", [Fraction(1, 3), Fraction(-5, 2), Fraction(7)])
def test_radial_coefficient_binomial_series(lam):
    # |x|^lam = r^lam (1 - x`^2 / r^2)^(lam/2): coefficient (-1)^j C(lam/2, j)
    half = sp.Rational(lam.numerator, lam.denominator) / 2
    for j in range(5):
        c = (-1) ** j * sp.binomial(half, j)
        assert sp.Rational(radial_coefficient(lam, j).numerator, radial_coefficient(lam, j).denominator) == c


@pytest.mark.parametrize("lam", [Fraction(1, 2), -0.75])
def test_radial_coefficient_gamma_ratio(lam):
    # (-1)^j Gamma(lam/2+1)/Gamma(lam/2-j+1) = Gamma(-lam/2+j)/Gamma(-lam/2)
    h = mpmath.mpf(float(lam)) / 2
    for j in range(5):
        lhs = (-1) ** j * mpmath.gamma(h + 1) / mpmath.gamma(h - j + 1)
        rhs = mpmath.gamma(-h + j) / mpmath.gamma(-h)
        assert float(lhs) == pytest.approx(float(rhs), rel=1e-13)
        assert float(radial_coefficient(lam, j)) == pytest.approx(float(lhs) / math.factorial(j), rel=1e-13)


@pytest.mark.parametrize("dims", [Dims(3, 1), Dims(2, 2), Dims(1, 2)], ids=str)
def test_super_power_polynomial_cases(dims):
    x2 = clifford_square(vector(dims))
    assert super_power(dims, 2).to_polynomial() == -x2
    assert super_power(dims, 4).to_polynomial() == x2 * x2
    with pytest.raises(ValueError):
        super_power(dims, 3).to_polynomial()
    with pytest.raises(UnsupportedCase):
        super_power(Dims(0, 2), 2)


@pytest.mark.parametrize("dims", [Dims(3, 1), Dims(2, 2), Dims(4, 1)], ids=str)
@pytest.mark.parametrize("lam", [4, 6, 8])
def test_radial_laplacian_matches_polynomial_laplacian(dims, lam):
    E = super_power(dims, lam)
    assert E.laplacian().to_polynomial() == laplacian(E.to_polynomial())


@pytest.mark.parametrize("dims", [Dims(3, 1), Dims(2, 2), Dims(5, 1), Dims(1, 2)], ids=str)
@pytest.mark.parametrize("ell", range(4))
def test_super_norm_residue_two_routes(dims, ell):
    assert super_norm_residue(dims, ell).consistent


def test_super_norm_residue_needs_bosonic_dimension():
    with pytest.raises(UnsupportedCase):
        super_norm_residue(Dims(0, 1), 0)


# Riesz kernels and fundamental solutions ----------------------------------------

@pytest.mark.parametrize("M,gamma", [(3, 1), (3, 0.5), (1, 2.5), (-2, 1), (4, 3)])
def test_riesz_normalization_against_mpmath(M, gamma):
    g = mpmath.mpf(gamma)
    oracle = 2 ** g * mpmath.pi ** (mpmath.mpf(M) / 2) * mpmath.gamma(g / 2) * mpmath.rgamma((M - g) / 2)
    assert float(riesz_normalization(M, gamma)) == pytest.approx(float(oracle), rel=1e-13)


def test_riesz_normalization_pole():
    with pytest.raises(DomainError):
        riesz_normalization(3, -2)


@pytest.mark.parametrize("dims,gamma", [(Dims(3, 1), 6), (Dims(2, 2), 3), (Dims(4, 1), Fraction(7, 2)),
                                        (Dims(3, 1), 0.5 + 4)])
def test_riesz_laplacian_step(dims, gamma):
    K = riesz_kernel(dims, gamma)
    assert riesz_laplacian_step(K).gamma == gamma - 2


def test_riesz_kernel_excluded_set():
    with pytest.raises(DomainError):
        riesz_kernel(Dims(3, 0), 3)


@given(rationals, st.integers(1, 12))
def test_chu_vandermonde_vanishes(s, ell):
    assert chu_vandermonde_sum(ell, s) == 0


def test_chu_vandermonde_at_zero_order():
    assert chu_vandermonde_sum(0, Fraction(2, 7)) == 1


@pytest.mark.parametrize("dims", [Dims(3, 1), Dims(2, 2), Dims(5, 2)], ids=str)
@pytest.mark.parametrize("s", [Fraction(1, 2), Fraction(3, 2), Fraction(1, 3)])
def test_coefficient_system_is_solved(dims, s):
    assert all(r == 0 for r in coefficient_system_residuals(dims, s))


@pytest.mark.parametrize("s", [Fraction(1, 2), Fraction(3, 2)])
def test_fundamental_solution_unfactored(s):
    chk = fundamental_solution_check(Dims(2, 2), s)
    assert chk.agree
    assert all(isinstance(c, Scalar) for c in chk.closed)


@pytest.mark.parametrize("s", [Fraction(1, 2), Fraction(3, 2)])
def test_fundamental_solution_factored_at_gamma_pole(s):
    dims = Dims(3, 1)
    chk = fundamental_solution_check(dims, s, factored=True)
    assert chk.agree
    if s == Fraction(1, 2):
        assert chk.common is None
        with pytest.raises(DomainError):
            fundamental_solution_check(dims, s)


def test_fundamental_solution_numeric_common_factor():
    chk = fundamental_solution_check(Dims(2, 2), Fraction(1, 3))
    assert chk.agree


def test_fundamental_solution_expansion_laplacian_gives_kernel():
    # (-Delta)^1 of K_2s is K_(2s-2) on the radial expansion
    dims, s = Dims(4, 1), Fraction(5, 2)
    E = fundamental_solution_expansion(dims, s)
    target = fundamental_solution_expansion(dims, s - 1)
    got = E.laplacian().scale(-1)
    for a, b in zip(got.coeffs, target.coeffs):
        assert float(a) == pytest.approx(float(b), rel=1e-12)


# log primitives --------------------------------------------------------------------

@pytest.mark.parametrize("ell", range(11))
def test_log_primitive_coefficients(ell):
    assert log_primitive_coeff(ell) == log_primitive_coeff_harmonic(ell)


@pytest.mark.parametrize("ell", range(8))
def test_log_primitive_derivative(ell):
    G, g = LogPrimitive(ell + 1), LogPrimitive(ell)
    assert G.derivative() == g
    h = 1e-5
    for z in (0.3, 1.0, 2.7):
        assert (G(z + h) - G(z - h)) / (2 * h) == pytest.approx(g(z), abs=1e-6)


def test_log_primitive_domain():
    with pytest.raises(DomainError):
        LogPrimitive(2)(-1.0)
    with pytest.raises(ValueError):
        LogPrimitive(0).derivative()


# concentrated deltas ------------------------------------------------------------------

def test_supersphere_delta_terms():
    d = Dims(3, 2)
    delta = supersphere_delta(d, 1)
    orders = [o for o, _ in delta.terms]
    assert orders == [1, 2, 3]
    xf2 = clifford_square(vector(d)) - clifford_square(vector(d)).body()
    assert delta.terms[1][1] == xf2
    assert delta.terms[2][1] == xf2 * xf2 * Fraction(1, 2)


def test_concentrated_delta_rejects_odd_and_degenerate():
    d = Dims(2, 1)
    from superradon.algebra import SuperPolynomial
    with pytest.raises(ValueError):
        concentrated_delta(SuperPolynomial.fermionic(d, 1))
    with pytest.raises(DomainError):
        supersphere_delta(Dims(0, 1))
    with pytest.raises(DomainError):
        hyperplane_delta(d, direction=(0.0, 0.0))
