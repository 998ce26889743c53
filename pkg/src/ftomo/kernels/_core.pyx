# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops; see py_kernels.py for the reference implementations."""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, exp, fabs, log, sin, sqrt

cnp.import_array()

cdef double PI_QUARTER = 0.7511255444649425  # pi ** -0.25


def hermite_functions(int n_max, double[::1] xs):
    cdef Py_ssize_t nx = xs.shape[0]
    out = np.empty((n_max + 1, nx), dtype=np.float64)
    cdef double[:, ::1] o = out
    cdef Py_ssize_t i
    cdef int n
    cdef double x
    for i in range(nx):
        x = xs[i]
        o[0, i] = PI_QUARTER * exp(-0.5 * x * x)
        if n_max >= 1:
            o[1, i] = sqrt(2.0) * x * o[0, i]
        for n in range(1, n_max):
            o[n + 1, i] = sqrt(2.0 / (n + 1)) * x * o[n, i] - sqrt(
                n / (n + 1.0)
            ) * o[n - 1, i]
    return out


def optical_tomogram_grid(double complex[::1] coeffs, double[::1] xs,
                          double[::1] thetas):
    cdef Py_ssize_t nc = coeffs.shape[0]
    cdef Py_ssize_t nx = xs.shape[0]
    cdef Py_ssize_t nt = thetas.shape[0]
    # transpose so the inner dot runs over contiguous memory
    psi_t_arr = np.ascontiguousarray(hermite_functions(nc - 1, xs).T)
    cdef double[:, ::1] psi_t = psi_t_arr
    out = np.empty((nt, nx), dtype=np.float64)
    cdef double[:, ::1] o = out
    phased_arr = np.empty(nc, dtype=np.complex128)
    cdef double complex[::1] phased = phased_arr
    cdef Py_ssize_t t, i, n
    cdef double cr, ci, rr, ri, tmp, re, im, p
    for t in range(nt):
        cr = cos(thetas[t])
        ci = -sin(thetas[t])  # e^(-i theta)
        rr = 1.0  # running e^(-i n theta)
        ri = 0.0
        for n in range(nc):
            phased[n] = coeffs[n] * (rr + 1j * ri)
            tmp = rr * cr - ri * ci
            ri = rr * ci + ri * cr
            rr = tmp
        for i in range(nx):
            re = 0.0
            im = 0.0
            for n in range(nc):
                p = psi_t[i, n]
                re += phased[n].real * p
                im += phased[n].imag * p
            o[t, i] = re * re + im * im
    return out


def laguerre_all_degrees(int n_max, double a, double x):
    out = np.empty(n_max + 1, dtype=np.float64)
    cdef double[::1] o = out
    cdef int k
    o[0] = 1.0
    if n_max >= 1:
        o[1] = 1.0 + a - x
    for k in range(1, n_max):
        o[k + 1] = ((2 * k + 1 + a - x) * o[k] - (k + a) * o[k - 1]) / (k + 1)
    return out


cdef double _laguerre_last(int deg, double a, double x):
    # L_deg^(a)(x) by the same forward recurrence, keeping two slots only.
    cdef double prev = 1.0
    cdef double cur = 1.0 + a - x
    cdef double nxt
    cdef int k
    if deg == 0:
        return 1.0
    for k in range(1, deg):
        nxt = ((2 * k + 1 + a - x) * cur - (k + a) * prev) / (k + 1)
        prev = cur
        cur = nxt
    return cur


def photon_amplitude(double complex[::1] coeffs, int n, double complex alpha,
                     double[::1] log_fact):
    cdef Py_ssize_t n_state = coeffs.shape[0] - 1
    cdef double aa = sqrt(alpha.real * alpha.real + alpha.imag * alpha.imag)
    cdef double x = aa * aa
    cdef double la = log(aa)
    cdef double complex unit = alpha / aa
    cdef double complex conj_unit = unit.conjugate()
    cdef double complex amp = 0.0
    cdef double complex pw, base
    cdef double mag, lag
    cdef int m, top, k

    top = n if n < n_state else <int> n_state
    pw = 1.0
    for k in range(n):
        pw *= unit
    for m in range(top + 1):
        lag = _laguerre_last(m, n - m, x)
        mag = exp(0.5 * (log_fact[m] - log_fact[n]) + (n - m) * la - 0.5 * x)
        amp += coeffs[m] * mag * lag * pw
        pw *= conj_unit

    if n_state > n:
        base = -conj_unit
        pw = base
        for m in range(n + 1, <int> n_state + 1):
            lag = _laguerre_last(n, m - n, x)
            mag = exp(0.5 * (log_fact[n] - log_fact[m]) + (m - n) * la - 0.5 * x)
            amp += coeffs[m] * mag * lag * pw
            pw *= base

    return complex(amp)
