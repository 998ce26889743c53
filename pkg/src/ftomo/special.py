"""Numerically stable special functions used throughout the package.

Everything here is total on its stated domain and evaluated so that no raw
factorial or Hermite polynomial ever leaves the representable double range:
eigenfunctions come from the normalized recurrence, factorial and gamma
ratios live in log space, and the hypergeometric limit series is summed with
log-stabilized partial sums.
"""

import math

import numpy as np

from .errors import NonConvergence
from .kernels import hermite_functions, laguerre_all_degrees


def oscillator_eigenfunction(n, x):
    """Harmonic-oscillator eigenfunction psi_n(x).

    psi_n(x) = pi^(-1/4) 2^(-n/2) (n!)^(-1/2) e^(-x^2/2) H_n(x), computed via
    the normalized three-term recurrence (stable for n well beyond 150, where
    evaluating H_n directly would overflow).  ``x`` may be a scalar or array.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    vals = hermite_functions(n, xs)[n]
    return float(vals[0]) if np.isscalar(x) or np.ndim(x) == 0 else vals


def oscillator_eigenfunctions(n_max, x):
    """All of psi_0..psi_n_max on the grid ``x``; shape (n_max+1, len(x))."""
    return hermite_functions(n_max, np.atleast_1d(np.asarray(x, dtype=np.float64)))


def laguerre_assoc(n, a, x):
    """Associated Laguerre polynomial L_n^(a)(x).

    Stable forward recurrence
        (k+1) L_{k+1}^(a) = (2k+1+a-x) L_k^(a) - (k+a) L_{k-1}^(a)
    with L_0 = 1, L_1 = 1 + a - x.  Requires n >= 0 and integer a >= -n.
    Negative integer indices are reflected to nonnegative ones through
    L_n^(-k)(x) = (-x)^k (n-k)!/n! L_{n-k}^(k)(x), where the recurrence would
    lose accuracy to cancellation.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if a < -n:
        raise ValueError("upper index must satisfy a >= -n")
    if a < 0:
        k = -int(a)
        scale = (-x) ** k * math.exp(math.lgamma(n - k + 1) - math.lgamma(n + 1))
        return scale * float(laguerre_all_degrees(n - k, float(k), float(x))[n - k])
    return float(laguerre_all_degrees(n, float(a), float(x))[n])


def log_factorial(n):
    """ln n! for integer n >= 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return math.lgamma(n + 1)


def log_gamma(x):
    """ln Gamma(x) for x > 0."""
    if x <= 0:
        raise ValueError("log_gamma requires x > 0")
    return math.lgamma(x)


_MAX_TERMS = 10_000


def hyp0f1(a, z):
    """Confluent hypergeometric limit function 0F1(a; z) for a > 0, z >= 0.

    0F1(a; z) = sum_n z^n Gamma(a) / (n! Gamma(a+n)).  Terms are accumulated
    through their logarithms (log-sum-exp), stopping once term/sum < 1e-16.
    """
    if a <= 0:
        raise ValueError("hyp0f1 requires a > 0")
    if z < 0:
        raise ValueError("hyp0f1 requires z >= 0")
    if z == 0:
        return 1.0
    log_z = math.log(z)
    log_term = 0.0  # n = 0 term
    log_sum = 0.0
    for n in range(_MAX_TERMS):
        log_term += log_z - math.log(n + 1.0) - math.log(a + n)
        log_sum = np.logaddexp(log_sum, log_term)
        if log_term - log_sum < math.log(1e-16):
            return float(math.exp(log_sum))
    raise NonConvergence(
        f"hyp0f1({a}, {z}) did not converge within {_MAX_TERMS} terms"
    )
