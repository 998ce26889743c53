"""Entropy machinery: regrouping, information, Laguerre-weight inequalities."""

import math

import numpy as np
import pytest
from scipy.linalg import expm

from ftomo import (
    ProbabilityVector,
    TailNotConverged,
    displaced_fock_pmf,
    flatten,
    laguerre_lambda,
    marginals,
    regroup,
    shannon_entropy,
    shannon_information,
    verify_laguerre_inequality,
)

# -sum p ln p for Poisson(1), summed in 40-digit arithmetic to tail 1e-12
H_POISSON_1 = 1.3048422422562514843
# e^1.5 |<2|D(sqrt(1.5))|5>|^2 = (2!/5!) 1.5^3 [L_2^(3)(1.5)]^2 (exact 0.73916015625)
LAMBDA_2_5_X15 = 0.73916015625


class TestShannonEntropy:
    def test_point_mass(self):
        assert shannon_entropy(ProbabilityVector(np.array([1.0]))) == 0.0

    def test_fair_coin(self):
        pv = ProbabilityVector(np.array([0.5, 0.5]))
        assert shannon_entropy(pv) == pytest.approx(math.log(2.0), abs=1e-15)

    def test_poisson_frozen(self):
        m = np.arange(40)
        p = np.exp(-1.0 + m * 0.0 - np.array([math.lgamma(k + 1) for k in m]))
        pv = ProbabilityVector(p, tail_mass=1.0 - p.sum())
        assert shannon_entropy(pv) == pytest.approx(H_POISSON_1, abs=1e-12)

    def test_validation(self):
        with pytest.raises(ValueError):
            ProbabilityVector(np.array([0.7, 0.7]))
        with pytest.raises(ValueError):
            ProbabilityVector(np.array([1.1, -0.1]))


class TestRegroup:
    def test_pairs(self):
        pv = ProbabilityVector(np.array([0.1, 0.2, 0.3, 0.4]))
        t = regroup(pv, 2)
        assert t.table.tolist() == [[0.1, 0.2], [0.3, 0.4]]

    def test_roundtrip(self):
        pv = ProbabilityVector(np.array([0.05, 0.15, 0.2, 0.25, 0.35]))
        for s in (2, 3, 4):
            flat = flatten(regroup(pv, s))
            assert np.array_equal(flat[: len(pv.p)], pv.p)
            assert np.all(flat[len(pv.p):] == 0.0)

    def test_zero_padding_block(self):
        pv = ProbabilityVector(np.full(7, 1.0 / 7.0))
        t = regroup(pv, 3)
        assert t.table.shape == (3, 3)
        assert t.table[2, 2] == 0.0
        assert t.table.sum() == pytest.approx(1.0)

    def test_marginal_orientation(self):
        # rows sum within blocks (Pi_j), columns across blocks (pi_l)
        pv = ProbabilityVector(np.array([0.1, 0.2, 0.3, 0.4]))
        pi_j, pi_l = marginals(regroup(pv, 2))
        assert np.allclose(pi_j, [0.3, 0.7])
        assert np.allclose(pi_l, [0.4, 0.6])

    def test_block_size_validated(self):
        with pytest.raises(ValueError):
            regroup(ProbabilityVector(np.array([1.0])), 1)


class TestShannonInformation:
    def test_point_mass(self):
        pv = ProbabilityVector(np.array([1.0, 0.0, 0.0, 0.0]))
        assert shannon_information(pv, 2) == 0.0

    def test_product_table(self):
        a = np.array([0.3, 0.7])
        b = np.array([0.6, 0.4])
        pv = ProbabilityVector(np.outer(a, b).reshape(-1))
        assert abs(shannon_information(pv, 2)) < 1e-14

    def test_nonnegative_random(self):
        rng = np.random.default_rng(21)
        for _ in range(50):
            p = rng.random(int(rng.integers(2, 40)))
            pv = ProbabilityVector(p / p.sum())
            for s in (2, 3, 4, 5):
                assert shannon_information(pv, s) >= -1e-12

    def test_base_entropy_is_s_invariant(self):
        # regrouping changes the marginal entropies but never H_p itself
        rng = np.random.default_rng(22)
        p = rng.random(23)
        pv = ProbabilityVector(p / p.sum())
        h_p = shannon_entropy(pv)
        marg_entropies = set()
        for s in (2, 3, 4):
            table = regroup(pv, s)
            assert shannon_entropy(
                ProbabilityVector(flatten(table))
            ) == pytest.approx(h_p, abs=1e-13)
            pi_j, pi_l = marginals(table)
            marg_entropies.add(round(shannon_entropy(pi_j) + shannon_entropy(pi_l), 10))
        assert len(marg_entropies) > 1


class TestLaguerreLambda:
    def test_diagonal_at_origin(self):
        for n in (0, 1, 4):
            assert laguerre_lambda(n, n, 0.0) == 1.0

    def test_frozen_value(self):
        assert laguerre_lambda(2, 5, 1.5) == pytest.approx(LAMBDA_2_5_X15, rel=1e-12)

    def test_symmetric(self):
        for x in (0.3, 2.5):
            for n in (0, 1, 3):
                for m in (2, 5, 9):
                    assert laguerre_lambda(n, m, x) == pytest.approx(
                        laguerre_lambda(m, n, x), rel=1e-12
                    )

    def test_unit_sum(self):
        for n in (0, 2, 5):
            for x in (0.1, 1.0, 4.0):
                pmf = displaced_fock_pmf(n, x)
                assert pmf.p.sum() + pmf.tail_mass == pytest.approx(1.0, abs=1e-12)

    def test_n0_pmf_is_poisson(self):
        # lambda_m(0, x) = x^m/m!, so the n = 0 information curve is the
        # Poisson one
        x = 1.3
        pmf = displaced_fock_pmf(0, x)
        m = np.arange(len(pmf.p))
        ref = np.exp(-x + m * math.log(x) - np.array([math.lgamma(k + 1) for k in m]))
        assert np.allclose(pmf.p, ref, atol=1e-15)

    def test_displacement_oracle(self):
        # e^(-x) lambda_m(n, x) = |<m|D(sqrt(x))|n>|^2
        dim = 60
        a = np.diag(np.sqrt(np.arange(1, dim)), 1)
        for x in (0.8, 2.3):
            d = expm(math.sqrt(x) * (a.conj().T - a))
            for n in (0, 2):
                for m in (1, 4, 7):
                    ref = abs(d[m, n]) ** 2
                    got = math.exp(-x) * laguerre_lambda(n, m, x)
                    assert got == pytest.approx(ref, rel=1e-10, abs=1e-15)


class TestInequality:
    def test_equality_limit_at_origin(self):
        res = verify_laguerre_inequality(0, 1e-8, 2)
        assert abs(res.lhs) < 1e-6
        assert res.holds

    def test_holds_on_sample(self):
        for n in range(6):
            for x in (0.25, 1.0, 4.0):
                assert verify_laguerre_inequality(n, x, 2).holds

    def test_identity_with_information(self):
        for n, x, s in ((0, 0.5, 2), (3, 2.0, 3), (5, 4.0, 4)):
            res = verify_laguerre_inequality(n, x, s)
            info = shannon_information(displaced_fock_pmf(n, x), s)
            assert abs(res.lhs - math.exp(x) * info) <= 1e-8

    def test_tail_not_converged(self):
        with pytest.raises(TailNotConverged):
            verify_laguerre_inequality(0, 4.0, 2, m_max=5)


def test_information_curve_matches_pointwise():
    from ftomo import information_curve

    xs = [0.5, 1.0, 2.0]
    curve = information_curve(1, xs, s=3)
    for x, val in zip(xs, curve):
        assert val == pytest.approx(
            shannon_information(displaced_fock_pmf(1, x), 3), abs=1e-14
        )
