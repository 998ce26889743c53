"""Shannon-entropy machinery over discrete probability vectors.

The regrouping map sends p_m to the table P[j, l] = p_{s j + l} (j counts
blocks, l the position inside a block).  Reading the table as a joint
distribution of an artificial bipartite system, subadditivity
H_Pi + H_pi >= H_p holds, and the gap I = H_Pi + H_pi - H_p measures the
correlation induced by the regrouping.  Applied to the photon-number
distribution of a displaced Fock state it yields inequalities for the
associated Laguerre polynomials.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import TailNotConverged
from .kernels import laguerre_all_degrees

_PMF_CAP = 4096


@dataclass(frozen=True)
class ProbabilityVector:
    """Finite nonnegative vector with optional tail mass beyond the prefix."""

    p: np.ndarray
    tail_mass: float = 0.0

    def __post_init__(self):
        p = np.ascontiguousarray(self.p, dtype=np.float64)
        object.__setattr__(self, "p", p)
        if np.any(p < 0):
            raise ValueError("probabilities must be nonnegative")
        total = float(p.sum()) + self.tail_mass
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"probabilities sum to {total!r}, not 1")


@dataclass(frozen=True)
class RegroupedTable:
    """Block table P[j, l] = p_{s j + l}; zero-padded in the last block."""

    table: np.ndarray
    s: int


def _plogp(p):
    p = np.asarray(p, dtype=np.float64)
    return np.where(p > 0, p * np.log(np.where(p > 0, p, 1.0)), 0.0)


def shannon_entropy(pv):
    """H = -sum p ln p with the 0 ln 0 = 0 convention (natural log)."""
    p = pv.p if isinstance(pv, ProbabilityVector) else np.asarray(pv)
    return float(-_plogp(p).sum())


def regroup(pv, s):
    """Map p_m -> P[j, l] = p_{s j + l}; invertible up to trailing zeros."""
    if s < 2:
        raise ValueError("block size s must be >= 2")
    p = pv.p if isinstance(pv, ProbabilityVector) else np.asarray(pv, dtype=float)
    pad = (-len(p)) % s
    padded = np.concatenate([p, np.zeros(pad)]) if pad else p.copy()
    return RegroupedTable(padded.reshape(-1, s), s)


def flatten(table):
    """Inverse of regroup (returns the zero-padded vector)."""
    return table.table.reshape(-1)


def marginals(table):
    """(Pi_j, pi_l): block sums over l and position sums over j."""
    return table.table.sum(axis=1), table.table.sum(axis=0)


def shannon_information(pv, s):
    """Subadditivity gap I = H_Pi + H_pi - H_p for the block-s regrouping.

    Nonnegative up to rounding; zero for point masses and for tables of
    product form.
    """
    table = regroup(pv, s)
    pi_j, pi_l = marginals(table)
    h_p = shannon_entropy(pv)
    return shannon_entropy(pi_j) + shannon_entropy(pi_l) - h_p


def laguerre_lambda(n, m, x):
    """Weight lambda_m(n, x): for j = max(m,n), k = min(m,n),

        (k!/j!) x^(j-k) [L_k^(j-k)(x)]^2,

    so that p_m = e^(-x) lambda_m(n, x) is the photon-number distribution of
    the displaced Fock state |n>.  Log-stabilized; symmetric in m and n.
    """
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    if x < 0:
        raise ValueError("x must be nonnegative")
    if x == 0.0:
        return 1.0 if m == n else 0.0
    k, j = min(m, n), max(m, n)
    lag = float(laguerre_all_degrees(k, j - k, x)[k])
    log_mag = math.lgamma(k + 1.0) - math.lgamma(j + 1.0) + (j - k) * math.log(x)
    return math.exp(log_mag) * lag * lag


def _lambda_row(n, x, m_max):
    return np.array([laguerre_lambda(n, m, x) for m in range(m_max + 1)])


def displaced_fock_pmf(n, x, m_max=None):
    """p_m = e^(-x) lambda_m(n, x) as a ProbabilityVector with tail < 1e-12.

    With m_max=None the cutoff grows until the tail criterion is met;
    raises TailNotConverged when an explicit m_max is too small (or the cap
    is hit).
    """
    if m_max is None:
        m_max = max(32, int(n + x + 10 * math.sqrt(x + n + 1)))
        while m_max <= _PMF_CAP:
            p = np.exp(-x) * _lambda_row(n, x, m_max)
            tail = 1.0 - float(p.sum())
            if tail < 1e-12:
                return ProbabilityVector(p, max(tail, 0.0))
            m_max *= 2
        raise TailNotConverged(f"pmf tail above 1e-12 at the {_PMF_CAP} cap")
    p = np.exp(-x) * _lambda_row(n, x, m_max)
    tail = 1.0 - float(p.sum())
    if tail >= 1e-12:
        raise TailNotConverged(f"pmf tail {tail:g} at m_max={m_max}")
    return ProbabilityVector(p, max(tail, 0.0))


class InequalityResult(NamedTuple):
    lhs: float
    holds: bool


def verify_laguerre_inequality(n, x, s, m_max=None):
    """Left-hand side of the block-s entropic inequality in lambda form.

    lhs = -sum_j L_j ln L_j - sum_l l_l ln l_l + sum_m lambda_m ln lambda_m
          + x e^x,
    where L_j are within-block sums and l_l across-block sums of
    lambda_m(n, x).  Identically equal to e^x I(n, x); the implementation
    checks that identity before reporting ``holds = lhs >= -1e-10``.
    """
    pmf = displaced_fock_pmf(n, x, m_max)
    lam = pmf.p * math.exp(x)
    table = regroup(ProbabilityVector(pmf.p, pmf.tail_mass), s)
    lam_table = table.table * math.exp(x)
    block_sums = lam_table.sum(axis=1)
    pos_sums = lam_table.sum(axis=0)
    lhs = float(
        -_plogp(block_sums).sum()
        - _plogp(pos_sums).sum()
        + _plogp(lam).sum()
        + x * math.exp(x)
    )
    info = shannon_information(pmf, s)
    tol = max(1e-8, 1e-12 * math.exp(x))
    assert abs(lhs - math.exp(x) * info) <= tol, (
        f"lambda-form lhs {lhs!r} != e^x I {math.exp(x) * info!r}"
    )
    return InequalityResult(lhs, lhs >= -1e-10)


def information_curve(n, xs, s=2):
    """I(n, x) sampled over the grid xs (the oscillating-information curves)."""
    return np.array([shannon_information(displaced_fock_pmf(n, x), s) for x in xs])
