"""Pure numpy implementations of the hot inner loops.

These mirror the compiled kernels in ``_core.pyx`` one to one; the package
selects whichever is available at import time (see ``__init__``).
"""

import math

import numpy as np

_PI_QUARTER = math.pi ** -0.25


def hermite_functions(n_max, xs):
    """Oscillator eigenfunctions psi_0..psi_n_max on the grid ``xs``.

    psi_n(x) = pi^(-1/4) 2^(-n/2) (n!)^(-1/2) e^(-x^2/2) H_n(x), evaluated
    through the normalized recurrence
        psi_{n+1} = sqrt(2/(n+1)) x psi_n - sqrt(n/(n+1)) psi_{n-1}
    so no raw Hermite polynomial (which overflows near n ~ 150) ever appears.

    Returns an array of shape (n_max + 1, len(xs)).
    """
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    out = np.empty((n_max + 1, xs.shape[0]), dtype=np.float64)
    out[0] = _PI_QUARTER * np.exp(-0.5 * xs * xs)
    if n_max >= 1:
        out[1] = math.sqrt(2.0) * xs * out[0]
    for n in range(1, n_max):
        out[n + 1] = math.sqrt(2.0 / (n + 1)) * xs * out[n] - math.sqrt(
            n / (n + 1.0)
        ) * out[n - 1]
    return out


def optical_tomogram_grid(coeffs, xs, thetas):
    """|sum_n c_n e^(-i n theta) psi_n(x)|^2 on the (theta, x) grid.

    Returns an array of shape (len(thetas), len(xs)).
    """
    coeffs = np.ascontiguousarray(coeffs, dtype=np.complex128)
    thetas = np.ascontiguousarray(thetas, dtype=np.float64)
    psi = hermite_functions(coeffs.shape[0] - 1, xs)
    n = np.arange(coeffs.shape[0])
    phased = np.exp(-1j * np.outer(thetas, n)) * coeffs
    amp = phased @ psi
    return amp.real**2 + amp.imag**2


def laguerre_all_degrees(n_max, a, x):
    """Associated Laguerre values L_k^(a)(x) for k = 0..n_max (scalar x).

    Forward recurrence (k+1) L_{k+1} = (2k+1+a-x) L_k - (k+a) L_{k-1}.
    """
    out = np.empty(n_max + 1, dtype=np.float64)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = 1.0 + a - x
    for k in range(1, n_max):
        out[k + 1] = ((2 * k + 1 + a - x) * out[k] - (k + a) * out[k - 1]) / (k + 1)
    return out


def photon_amplitude(coeffs, n, alpha, log_fact):
    """Amplitude sum_m c_m <n|D(alpha)|m> including the e^(-|alpha|^2/2) factor.

    Two branches over m <= n and m > n, with every factorial ratio kept in
    log space.  ``log_fact[k]`` must hold ln k! for k up to
    max(n, len(coeffs) - 1).  ``alpha`` must be nonzero (the caller handles
    alpha = 0, where the tomogram collapses to |c_n|^2).
    """
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    n_state = coeffs.shape[0] - 1
    x = abs(alpha) ** 2
    la = math.log(abs(alpha))
    unit = alpha / abs(alpha)
    amp = 0.0 + 0.0j

    # m <= n: c_m sqrt(m!/n!) alpha^(n-m) L_m^(n-m)(x)
    top = min(n, n_state)
    if top >= 0:
        pw = unit**n  # phase of alpha^(n-m), walked down as m grows
        for m in range(top + 1):
            lag = laguerre_all_degrees(m, n - m, x)[m] if m else 1.0
            mag = math.exp(
                0.5 * (log_fact[m] - log_fact[n]) + (n - m) * la - 0.5 * x
            )
            amp += coeffs[m] * mag * lag * pw
            pw *= np.conjugate(unit)

    # m > n: c_m sqrt(n!/m!) (-alpha*)^(m-n) L_n^(m-n)(x)
    if n_state > n:
        base = -np.conjugate(unit)
        pw = base
        for m in range(n + 1, n_state + 1):
            lag = laguerre_all_degrees(n, m - n, x)[n] if n else 1.0
            mag = math.exp(
                0.5 * (log_fact[n] - log_fact[m]) + (m - n) * la - 0.5 * x
            )
            amp += coeffs[m] * mag * lag * pw
            pw *= base

    return complex(amp)
