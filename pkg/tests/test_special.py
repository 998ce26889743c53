"""Special-function kernels against closed forms and scipy references."""

import math

import numpy as np
import pytest
from scipy.special import eval_genlaguerre, eval_hermite, gammaln

from ftomo import (
    NonConvergence,
    hyp0f1,
    laguerre_assoc,
    log_factorial,
    log_gamma,
    oscillator_eigenfunction,
    oscillator_eigenfunctions,
)

# pi^(-1/4) 2^(-3/2) 6^(-1/2) e^(-1/2) H_3(1), H_3(1) = 8 - 12 = -4,
# evaluated in 40-digit arithmetic
PSI_3_AT_1 = -0.26302962362333344326

# direct series sum_n 4^n Gamma(2) / (n! Gamma(2+n)) to machine precision
HYP0F1_2_4 = 4.8797325768522249547
# Bessel identity 0F1(1, x) = I_0(2 sqrt(x))
I0_OF_2 = 2.2795853023360672674


class TestOscillatorEigenfunction:
    def test_ground_state_origin(self):
        assert oscillator_eigenfunction(0, 0.0) == pytest.approx(
            math.pi ** -0.25, abs=1e-15
        )

    def test_odd_state_vanishes_at_origin(self):
        assert oscillator_eigenfunction(1, 0.0) == 0.0

    def test_frozen_value_n3(self):
        assert oscillator_eigenfunction(3, 1.0) == pytest.approx(
            PSI_3_AT_1, abs=1e-14
        )

    def test_against_raw_hermite(self):
        # raw-polynomial route is safe at these orders and independent
        xs = np.linspace(-4.0, 4.0, 17)
        for n in (2, 7, 15, 30):
            ref = (
                math.pi ** -0.25
                * 2.0 ** (-n / 2.0)
                * math.exp(-0.5 * gammaln(n + 1))
                * np.exp(-0.5 * xs**2)
                * eval_hermite(n, xs)
            )
            got = oscillator_eigenfunction(n, xs)
            assert np.max(np.abs(got - ref)) < 1e-10

    def test_bounded_up_to_n60(self):
        xs = np.linspace(-10.0, 10.0, 401)
        table = oscillator_eigenfunctions(60, xs)
        assert np.max(np.abs(table)) <= 1.0

    def test_quadrature_normalization(self):
        xs = np.linspace(-12.0, 12.0, 4001)
        table = oscillator_eigenfunctions(20, xs)
        trap = getattr(np, "trapezoid", None) or np.trapz
        for n in range(21):
            assert trap(table[n] ** 2, xs) == pytest.approx(1.0, abs=1e-8)

    def test_no_overflow_high_order(self):
        # raw H_200 would overflow; the normalized recurrence must not
        assert np.all(np.isfinite(oscillator_eigenfunctions(220, np.array([3.0]))))


class TestLaguerre:
    def test_degree_zero_is_one(self):
        assert laguerre_assoc(0, 5, 3.7) == 1.0

    def test_degree_one_at_origin(self):
        assert laguerre_assoc(1, 0, 0.0) == 1.0

    def test_frozen_value(self):
        # L_2^(1)(x) = 3 - 3x + x^2/2, exactly -1 at x = 2
        assert laguerre_assoc(2, 1, 2.0) == pytest.approx(-1.0, abs=1e-14)

    def test_against_scipy(self):
        rng = np.random.default_rng(5)
        for _ in range(60):
            n = int(rng.integers(0, 25))
            a = int(rng.integers(0, 10))
            x = float(rng.uniform(0.0, 12.0))
            ref = eval_genlaguerre(n, a, x)
            assert laguerre_assoc(n, a, x) == pytest.approx(
                ref, rel=1e-10, abs=1e-10
            )

    def test_symmetry_weight(self):
        # n!/m! x^(m-n) [L_n^(m-n)]^2 is symmetric in n <-> m
        for x in (0.1, 1.0, 5.0):
            for n in range(21):
                for m in range(n, 21):
                    lhs = math.exp(
                        gammaln(n + 1) - gammaln(m + 1) + (m - n) * math.log(x)
                    ) * laguerre_assoc(n, m - n, x) ** 2
                    rhs = math.exp(
                        gammaln(m + 1) - gammaln(n + 1) + (n - m) * math.log(x)
                    ) * laguerre_assoc(m, n - m, x) ** 2
                    assert lhs == pytest.approx(rhs, rel=1e-10)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            laguerre_assoc(-1, 0, 1.0)
        with pytest.raises(ValueError):
            laguerre_assoc(2, -3, 1.0)


class TestLogGamma:
    def test_log_factorial_trivial(self):
        assert log_factorial(0) == 0.0
        assert log_factorial(5) == pytest.approx(math.log(120.0), abs=1e-15)

    def test_log_gamma_half(self):
        assert log_gamma(0.5) == pytest.approx(math.log(math.sqrt(math.pi)), abs=1e-15)

    def test_relative_error(self):
        for x in (0.1, 1.7, 25.0, 300.5, 1e4):
            assert log_gamma(x) == pytest.approx(float(gammaln(x)), rel=1e-13)

    def test_domain(self):
        with pytest.raises(ValueError):
            log_gamma(0.0)
        with pytest.raises(ValueError):
            log_gamma(-2.0)
        with pytest.raises(ValueError):
            log_factorial(-1)


class TestHyp0f1:
    def test_at_zero(self):
        for a in (0.3, 1.0, 7.5):
            assert hyp0f1(a, 0.0) == 1.0

    def test_bessel_identity(self):
        assert hyp0f1(1.0, 1.0) == pytest.approx(I0_OF_2, rel=1e-14)

    def test_frozen_series_value(self):
        assert hyp0f1(2.0, 4.0) == pytest.approx(HYP0F1_2_4, rel=1e-14)

    def test_lower_bound(self):
        rng = np.random.default_rng(11)
        for _ in range(40):
            assert hyp0f1(float(rng.uniform(0.1, 20)), float(rng.uniform(0, 30))) >= 1.0

    def test_domain_and_convergence(self):
        with pytest.raises(ValueError):
            hyp0f1(0.0, 1.0)
        with pytest.raises(ValueError):
            hyp0f1(1.0, -0.5)
        with pytest.raises(NonConvergence):
            hyp0f1(1.0, 1e9)
