"""Deformed quadrature statistics and the Schroedinger-Robertson bound.

The deformed quadratures are Q = (A + A+)/sqrt(2), P = (A - A+)/(i sqrt(2))
with A = a f(n).  The bound reads
    sigma_QQ sigma_PP - sigma_QP^2 >= |<[A, A+]>|^2 / 4,
and for the qosc family at small lam the right-hand side expands to
    (1 + lam^2 <n^2 + n + 1/3>) / 4 + O(lam^4).
hbar = 1 throughout.
"""

import math
from dataclasses import dataclass

import numpy as np

from .deformation import commutator_diag, f_value
from .tomography import photon_moment, quadrature_moment

# X^4 couples |n> to |n +/- 4>, so four guard levels make the moment
# matrices exact for any finite input vector.
_GUARD_LEVELS = 4


@dataclass(frozen=True)
class QuadratureStats:
    """First/second moments of the deformed quadratures plus the SR sides."""

    mean_q: float
    mean_p: float
    sigma_qq: float
    sigma_pp: float
    sigma_qp: float
    commutator_mean: complex
    sr_lhs: float
    sr_rhs: float
    truncation_warning: bool = False


def deformed_quadrature_stats(state, spec):
    """Moments of Q, P for ``state`` under the deformation ``spec``.

    Builds the truncated matrix of A (A|n> = f(n) sqrt(n) |n-1>) with guard
    levels, so all quadratic moments of the given finite vector are exact.
    ``truncation_warning`` flags a boundary amplitude above 1e-8, i.e. a
    state that itself looks truncated.
    """
    c = state.coeffs
    dim = c.shape[0] + _GUARD_LEVELS
    a_mat = np.zeros((dim, dim), dtype=np.complex128)
    for n in range(1, dim):
        a_mat[n - 1, n] = math.sqrt(n) * f_value(spec, n)
    q_mat = (a_mat + a_mat.conj().T) / math.sqrt(2.0)
    p_mat = (a_mat - a_mat.conj().T) / (1j * math.sqrt(2.0))

    psi = np.zeros(dim, dtype=np.complex128)
    psi[: c.shape[0]] = c

    def mean(op):
        return complex(np.vdot(psi, op @ psi))

    mq = mean(q_mat).real
    mp = mean(p_mat).real
    sqq = mean(q_mat @ q_mat).real - mq * mq
    spp = mean(p_mat @ p_mat).real - mp * mp
    sqp = 0.5 * mean(q_mat @ p_mat + p_mat @ q_mat).real - mq * mp

    probs = np.abs(c) ** 2
    comm = complex(
        sum(p * commutator_diag(spec, n) for n, p in enumerate(probs) if p > 0)
    )
    sr_lhs = sqq * spp - sqp * sqp
    sr_rhs = 0.25 * abs(comm) ** 2
    warn = bool(c.shape[0] > 1 and abs(c[-1]) > 1e-8)
    return QuadratureStats(mq, mp, sqq, spp, sqp, comm, sr_lhs, sr_rhs, warn)


def qosc_small_lambda_rhs(state, lam):
    """Small-lam expansion of the qosc SR bound: (1 + lam^2 <n^2+n+1/3>)/4."""
    if lam < 0:
        raise ValueError("lam must be nonnegative")
    moment = photon_moment(state, 2) + photon_moment(state, 1) + 1.0 / 3.0
    return 0.25 * (1.0 + lam * lam * moment)


def effective_planck(lam):
    """Nonlinearity-enlarged ground-state bound ratio: 1 + lam^2 / 3."""
    if lam < 0:
        raise ValueError("lam must be nonnegative")
    return 1.0 + lam * lam / 3.0


_MOMENT_PHASES = (0.0, math.pi / 4.0, math.pi / 2.0, 3.0 * math.pi / 4.0)


def moment_from_optical_tomogram(state, constant="corrected"):
    """<n^2 + n + 1/3> from fourth quadrature moments at four phases.

    With S4 = sum of <X^4> over theta in {0, pi/4, pi/2, 3pi/4}, normal
    ordering of the four X_theta^4 sums (all e^(+-2i theta), e^(+-4i theta)
    terms cancel) gives S4 = 6 <n^2 + n> + 3, hence the default
        (S4 - 1) / 6.
    ``constant="plus-twelfth"`` selects the alternative S4/6 + 1/12 variant,
    kept only for comparison: it exceeds the operator value by exactly 1/4.
    """
    s4 = sum(quadrature_moment(state, theta, 4) for theta in _MOMENT_PHASES)
    if constant == "corrected":
        return (s4 - 1.0) / 6.0
    if constant == "plus-twelfth":
        return s4 / 6.0 + 1.0 / 12.0
    raise ValueError("constant must be 'corrected' or 'plus-twelfth'")
