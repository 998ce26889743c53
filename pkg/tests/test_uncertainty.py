"""Deformed quadrature statistics and the Schroedinger-Robertson bound."""

import math

import numpy as np
import pytest

from ftomo import (
    DeformationSpec,
    FockAmplitudes,
    deformed_quadrature_stats,
    effective_planck,
    f_coherent,
    f_value,
    moment_from_optical_tomogram,
    photon_moment,
    qosc_small_lambda_rhs,
)

IDENT = DeformationSpec.identity()


def dense_oracle_sigmas(state, spec, dim=64):
    """Independent dense-matrix computation of the Q, P moments."""
    a = np.zeros((dim, dim), complex)
    for n in range(1, dim):
        a[n - 1, n] = math.sqrt(n) * f_value(spec, n)
    q = (a + a.conj().T) / math.sqrt(2)
    p = (a - a.conj().T) / (1j * math.sqrt(2))
    psi = np.zeros(dim, complex)
    psi[: state.n_levels] = state.coeffs
    mq = np.vdot(psi, q @ psi).real
    mp = np.vdot(psi, p @ psi).real
    sqq = np.vdot(psi, q @ q @ psi).real - mq**2
    spp = np.vdot(psi, p @ p @ psi).real - mp**2
    sqp = 0.5 * np.vdot(psi, (q @ p + p @ q) @ psi).real - mq * mp
    return sqq, spp, sqp


class TestDeformedQuadratureStats:
    def test_vacuum_identity_minimum_uncertainty(self):
        st = deformed_quadrature_stats(FockAmplitudes.vacuum(), IDENT)
        assert st.sigma_qq == pytest.approx(0.5, abs=1e-14)
        assert st.sigma_pp == pytest.approx(0.5, abs=1e-14)
        assert st.sigma_qp == pytest.approx(0.0, abs=1e-15)
        assert st.sr_lhs == pytest.approx(0.25, abs=1e-14)
        assert st.sr_rhs == pytest.approx(0.25, abs=1e-14)

    def test_fock_states_closed_form(self):
        for n in (1, 4, 9):
            state = FockAmplitudes.fock(n)
            for spec in (IDENT, DeformationSpec.kerr(0.7), DeformationSpec.qosc(0.2)):
                st = deformed_quadrature_stats(state, spec)
                expect = (
                    (n + 1) * f_value(spec, n + 1) ** 2 + n * f_value(spec, n) ** 2
                ) / 2.0
                assert st.mean_q == pytest.approx(0.0, abs=1e-14)
                assert st.mean_p == pytest.approx(0.0, abs=1e-14)
                assert st.sigma_qp == pytest.approx(0.0, abs=1e-13)
                assert st.sigma_qq == pytest.approx(expect, rel=1e-12)
                assert st.sigma_pp == pytest.approx(expect, rel=1e-12)

    def test_against_dense_oracle(self):
        rng = np.random.default_rng(41)
        c = rng.normal(size=8) + 1j * rng.normal(size=8)
        state = FockAmplitudes(c / np.linalg.norm(c))
        for spec in (IDENT, DeformationSpec.kerr(1.5), DeformationSpec.qosc(0.25)):
            st = deformed_quadrature_stats(state, spec)
            sqq, spp, sqp = dense_oracle_sigmas(state, spec)
            assert st.sigma_qq == pytest.approx(sqq, rel=1e-12)
            assert st.sigma_pp == pytest.approx(spp, rel=1e-12)
            assert st.sigma_qp == pytest.approx(sqp, rel=1e-12, abs=1e-12)

    def test_qosc_zero_equals_identity(self):
        state = f_coherent(1.0 + 0.5j, IDENT)
        a = deformed_quadrature_stats(state, DeformationSpec.qosc(0.0))
        b = deformed_quadrature_stats(state, IDENT)
        assert a.sigma_qq == pytest.approx(b.sigma_qq, rel=1e-14)
        assert a.sr_rhs == pytest.approx(b.sr_rhs, rel=1e-14)

    def test_qosc_commutator_closed_form(self):
        lam = 0.2
        state = f_coherent(1.2, IDENT)
        st = deformed_quadrature_stats(state, DeformationSpec.qosc(lam))
        probs = np.abs(state.coeffs) ** 2
        expect = sum(
            p * (math.sinh(lam * (n + 1)) - math.sinh(lam * n)) / lam
            for n, p in enumerate(probs)
        )
        assert st.commutator_mean.real == pytest.approx(expect, rel=1e-10)
        assert st.commutator_mean.imag == 0.0

    def test_sr_inequality_matrix(self):
        states = [
            FockAmplitudes.vacuum(),
            FockAmplitudes.fock(3),
            FockAmplitudes.fock(10),
            f_coherent(2.0, IDENT),
            f_coherent(1.0 + 1.0j, IDENT),
            f_coherent(1.0, DeformationSpec.kerr(1.0)),
        ]
        specs = [
            IDENT,
            DeformationSpec.qosc(0.1),
            DeformationSpec.qosc(0.3),
            DeformationSpec.kerr(0.3),
            DeformationSpec.kerr(5.0),
        ]
        for state in states:
            for spec in specs:
                st = deformed_quadrature_stats(state, spec)
                assert st.sr_lhs >= st.sr_rhs - 1e-10

    def test_truncation_warning_flag(self):
        assert deformed_quadrature_stats(FockAmplitudes.fock(3), IDENT).truncation_warning
        # a mass tail of 1e-12 keeps boundary amplitudes ~ 1e-6, so the
        # default construction is flagged; a much tighter eps clears it
        assert deformed_quadrature_stats(
            f_coherent(1.0, IDENT), IDENT
        ).truncation_warning
        tight = f_coherent(1.0, IDENT, eps=1e-18)
        assert not deformed_quadrature_stats(tight, IDENT).truncation_warning


class TestSmallLambda:
    def test_vacuum_bound(self):
        vac = FockAmplitudes.vacuum()
        for lam in (0.0, 0.05, 0.3):
            assert qosc_small_lambda_rhs(vac, lam) == pytest.approx(
                0.25 * (1 + lam**2 / 3.0), abs=1e-15
            )

    def test_lambda_zero_exact(self):
        st = f_coherent(1.4, IDENT)
        assert qosc_small_lambda_rhs(st, 0.0) == 0.25

    def test_matches_exact_rhs_at_small_lambda(self):
        st = f_coherent(1.0, IDENT)
        exact = deformed_quadrature_stats(st, DeformationSpec.qosc(0.01)).sr_rhs
        assert qosc_small_lambda_rhs(st, 0.01) == pytest.approx(exact, abs=1e-6)

    def test_quartic_error_scaling(self):
        st = f_coherent(1.0, IDENT)

        def gap(lam):
            exact = deformed_quadrature_stats(st, DeformationSpec.qosc(lam)).sr_rhs
            return abs(exact - qosc_small_lambda_rhs(st, lam))

        coef = gap(0.1) / 0.1**4
        for lam in (0.05, 0.02, 0.01):
            assert 0.5 <= gap(lam) / (coef * lam**4) <= 2.0


class TestEffectivePlanck:
    def test_values(self):
        assert effective_planck(0.0) == 1.0
        assert effective_planck(0.1) == pytest.approx(1.0033333333333334, rel=1e-15)
        assert effective_planck(1.0) == pytest.approx(4.0 / 3.0, rel=1e-15)


class TestTomographicMoment:
    def test_vacuum(self):
        assert moment_from_optical_tomogram(FockAmplitudes.vacuum()) == pytest.approx(
            1.0 / 3.0, abs=1e-10
        )

    def test_fock1(self):
        assert moment_from_optical_tomogram(FockAmplitudes.fock(1)) == pytest.approx(
            7.0 / 3.0, abs=1e-10
        )

    def test_matches_operator_value(self):
        for state in (f_coherent(1.0, IDENT), f_coherent(0.5 + 1.0j, IDENT)):
            operator = photon_moment(state, 2) + photon_moment(state, 1) + 1.0 / 3.0
            assert moment_from_optical_tomogram(state) == pytest.approx(
                operator, abs=1e-6
            )

    def test_alt_constant_off_by_quarter(self):
        for state in (FockAmplitudes.vacuum(), f_coherent(1.0, IDENT)):
            dev = moment_from_optical_tomogram(
                state, "plus-twelfth"
            ) - moment_from_optical_tomogram(state)
            assert dev == pytest.approx(0.25, abs=1e-12)

    def test_unknown_constant(self):
        with pytest.raises(ValueError):
            moment_from_optical_tomogram(FockAmplitudes.vacuum(), "bogus")
