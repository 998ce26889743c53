"""Partial trace, linear entropy, and the closed-form series routes."""

import math

import numpy as np
import pytest
from scipy.special import gammaln

from ftomo import (
    DeformationSpec,
    DegenerateSuperposition,
    ReducedDensity,
    TwoModeAmplitudes,
    cat_entropy_identity_limit,
    cat_linear_entropy,
    cat_superposition,
    kerr_zero_entropy,
    linear_entropy,
    linear_entropy_series,
    log_f_factorial_table,
    reduce_mode2,
    two_mode_f_coherent_total,
)

# closed-form even-cat limit entropy at |alpha| = 1 (40-digit evaluation)
S_PLUS_LIMIT_A1 = 0.46467458757341776716


class TestReduceMode2:
    def test_product_state_rank_one(self):
        c1 = np.array([0.6, 0.8j])
        c2 = np.array([1.0, 1.0, 1.0]) / math.sqrt(3)
        st = TwoModeAmplitudes(np.outer(c1, c2))
        rho = reduce_mode2(st)
        assert rho.purity() == pytest.approx(1.0, abs=1e-14)
        assert linear_entropy(rho) == pytest.approx(0.0, abs=1e-14)

    def test_bell_like(self):
        c = np.array([[0.0, 1.0], [1.0, 0.0]]) / math.sqrt(2)
        rho = reduce_mode2(TwoModeAmplitudes(c.astype(complex)))
        assert np.allclose(rho.rho, np.diag([0.5, 0.5]))
        assert linear_entropy(rho) == pytest.approx(0.5)

    def test_random_trace_one(self):
        rng = np.random.default_rng(31)
        c = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
        c /= np.linalg.norm(c)
        rho = reduce_mode2(TwoModeAmplitudes(c))
        assert np.trace(rho.rho).real == pytest.approx(1.0, abs=1e-12)
        assert rho.min_eigenvalue() >= -1e-10

    def test_hermiticity_enforced(self):
        with pytest.raises(ValueError):
            ReducedDensity(np.array([[0.5, 1.0], [0.0, 0.5]], dtype=complex))


def literal_quadruple_sum(x1, x2, spec, top):
    """The unfactorized quadruple series, kept as the small-N oracle."""
    lff = log_f_factorial_table(spec, 2 * top)
    total = 0.0
    for n in range(top + 1):
        for m in range(top + 1):
            for p in range(top + 1):
                for k in range(top + 1):
                    total += math.exp(
                        (n + p) * math.log(x1)
                        + (k + m) * math.log(x2)
                        - gammaln(m + 1)
                        - gammaln(n + 1)
                        - gammaln(k + 1)
                        - gammaln(p + 1)
                        - lff[n + m]
                        - lff[p + m]
                        - lff[p + k]
                        - lff[n + k]
                    )
    norm_inv2 = sum(
        math.exp(
            n1 * math.log(x1)
            + n2 * math.log(x2)
            - gammaln(n1 + 1)
            - gammaln(n2 + 1)
            - 2 * lff[n1 + n2]
        )
        for n1 in range(top + 1)
        for n2 in range(top + 1)
    )
    return 1.0 - total / norm_inv2**2


class TestSeries:
    def test_collapse_against_literal_sum(self):
        spec = DeformationSpec.kerr(1.0)
        ref = literal_quadruple_sum(0.64, 0.36, spec, 18)
        got = linear_entropy_series(0.8, 0.6, spec)
        assert got == pytest.approx(ref, abs=1e-9)

    def test_identity_is_separable(self):
        assert linear_entropy_series(1.0, 0.7, DeformationSpec.identity()) == 0.0

    def test_symmetric_in_amplitudes(self):
        spec = DeformationSpec.kerr(0.5)
        assert linear_entropy_series(1.3, 0.4, spec) == pytest.approx(
            linear_entropy_series(0.4, 1.3, spec), abs=1e-12
        )

    def test_matches_partial_trace(self):
        for lam in (0.5, 2.0):
            spec = DeformationSpec.kerr(lam)
            for a1, a2 in ((1.0, 1.0), (0.5, 2.0)):
                st = two_mode_f_coherent_total(a1, a2, spec)
                ref = linear_entropy(reduce_mode2(st))
                assert linear_entropy_series(a1, a2, spec) == pytest.approx(
                    ref, abs=1e-8
                )

    def test_kerr_zero_closed_form(self):
        assert kerr_zero_entropy(1.0, 1.0) == pytest.approx(2.0 / 9.0, abs=1e-15)
        three = TwoModeAmplitudes(
            np.array([[1.0, 1.0], [1.0, 0.0]], dtype=complex) / math.sqrt(3.0)
        )
        assert kerr_zero_entropy(1.0, 1.0) == pytest.approx(
            linear_entropy(reduce_mode2(three)), abs=1e-14
        )

    def test_range(self):
        for lam in (0.2, 1.0, 5.0):
            s = linear_entropy_series(1.5, 1.0, DeformationSpec.kerr(lam))
            assert 0.0 <= s <= 1.0

    def test_tail_not_converged_beyond_cap(self):
        # Poisson-type weights peak at |a1|^2 + |a2|^2 = 293 > the 256 cap
        from ftomo import TailNotConverged

        with pytest.raises(TailNotConverged):
            linear_entropy_series(17.0, 2.0, DeformationSpec.identity())


class TestCatEntropy:
    def test_matches_partial_trace(self):
        for sign in (+1, -1):
            for lam in (0.5, 1.0):
                for a in (0.7, 1.3):
                    spec = DeformationSpec.kerr(lam)
                    ref = linear_entropy(reduce_mode2(cat_superposition(a, spec, sign)))
                    got = cat_linear_entropy(a, spec, sign)
                    assert got == pytest.approx(ref, abs=1e-8)

    def test_small_lambda_limits(self):
        spec = DeformationSpec.kerr(1e-4)
        assert cat_linear_entropy(1.0, spec, +1) == pytest.approx(0.0, abs=1e-3)
        assert cat_linear_entropy(1.0, spec, -1) == pytest.approx(0.5, abs=1e-3)

    def test_large_lambda_limits(self):
        spec = DeformationSpec.kerr(1e6)
        assert cat_linear_entropy(1.0, spec, -1) == pytest.approx(0.5, abs=1e-4)
        assert cat_linear_entropy(1.0, spec, +1) == pytest.approx(
            cat_entropy_identity_limit(1.0, +1), abs=1e-4
        )

    def test_degenerate(self):
        with pytest.raises(DegenerateSuperposition):
            cat_linear_entropy(0.0, DeformationSpec.kerr(1.0), -1)


class TestIdentityLimitClosedForm:
    def test_alpha_to_zero(self):
        assert cat_entropy_identity_limit(0.0, +1) == pytest.approx(0.0, abs=1e-15)

    def test_alpha_large(self):
        assert cat_entropy_identity_limit(40.0, +1) == pytest.approx(0.5, abs=1e-15)

    def test_frozen_at_one(self):
        assert cat_entropy_identity_limit(1.0, +1) == pytest.approx(
            S_PLUS_LIMIT_A1, rel=1e-14
        )

    def test_odd_is_half(self):
        for a in (0.0, 0.5, 3.0):
            assert cat_entropy_identity_limit(a, -1) == 0.5
