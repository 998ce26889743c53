"""Truncated Fock-space state constructors.

One-mode and two-mode deformed coherent states, their even/odd cat
superpositions, and the classical amplitude trajectory.  All constructors
truncate adaptively: levels are added until the discarded probability mass is
provably below ``eps`` (geometric tail bound), subject to a hard cap.
"""

import cmath
import hashlib
import math
from dataclasses import dataclass

import numpy as np

from .deformation import log_f
from .errors import (
    DeformationSingular,
    DegenerateSuperposition,
    IncompatibleDeformation,
    TruncationOverflow,
)

ONE_MODE_CAP = 512
TWO_MODE_CAP = 256
_NORM_TOL = 1e-10


def _digest(arr, label):
    h = hashlib.sha1(np.round(arr, 14).tobytes()).hexdigest()[:10]
    return f"{label}-{h}"


@dataclass(frozen=True)
class FockAmplitudes:
    """One-mode pure state sum_n c_n |n>, normalized, with tail metadata."""

    coeffs: np.ndarray
    trunc_tail: float = 0.0

    def __post_init__(self):
        c = np.ascontiguousarray(self.coeffs, dtype=np.complex128)
        object.__setattr__(self, "coeffs", c)
        norm = float(np.sum(np.abs(c) ** 2))
        if abs(norm - 1.0) > _NORM_TOL:
            raise ValueError(f"amplitudes not normalized: sum |c|^2 = {norm!r}")

    @property
    def n_levels(self):
        return self.coeffs.shape[0]

    @staticmethod
    def vacuum():
        return FockAmplitudes(np.array([1.0 + 0.0j]))

    @staticmethod
    def fock(n):
        c = np.zeros(n + 1, dtype=np.complex128)
        c[n] = 1.0
        return FockAmplitudes(c)

    def digest(self):
        return _digest(self.coeffs, f"psi1[{self.n_levels}]")

    def to_json(self):
        return {
            "coeffs": [[z.real, z.imag] for z in self.coeffs],
            "trunc_tail": self.trunc_tail,
        }

    @staticmethod
    def from_json(obj):
        c = np.array([complex(re, im) for re, im in obj["coeffs"]])
        return FockAmplitudes(c, float(obj.get("trunc_tail", 0.0)))


@dataclass(frozen=True)
class TwoModeAmplitudes:
    """Two-mode pure state sum C_{n1,n2} |n1 n2>, row index = mode 1."""

    coeffs: np.ndarray
    trunc_tail: float = 0.0

    def __post_init__(self):
        c = np.ascontiguousarray(self.coeffs, dtype=np.complex128)
        if c.ndim != 2:
            raise ValueError("two-mode coefficients must be a matrix")
        object.__setattr__(self, "coeffs", c)
        norm = float(np.sum(np.abs(c) ** 2))
        if abs(norm - 1.0) > _NORM_TOL:
            raise ValueError(f"amplitudes not normalized: sum |C|^2 = {norm!r}")

    @property
    def shape(self):
        return self.coeffs.shape

    def digest(self):
        n1, n2 = self.coeffs.shape
        return _digest(self.coeffs, f"psi2[{n1}x{n2}]")

    def to_json(self):
        flat = self.coeffs.reshape(-1)
        return {
            "coeffs": [[z.real, z.imag] for z in flat],
            "shape": list(self.coeffs.shape),
            "trunc_tail": self.trunc_tail,
        }

    @staticmethod
    def from_json(obj):
        flat = np.array([complex(re, im) for re, im in obj["coeffs"]])
        c = flat.reshape(tuple(obj["shape"]))
        return TwoModeAmplitudes(c, float(obj.get("trunc_tail", 0.0)))


@dataclass(frozen=True)
class ClassicalAmplitude:
    """Classical complex amplitude alpha = (q + i p)/sqrt(2)."""

    alpha: complex

    @property
    def energy(self):
        return abs(self.alpha) ** 2


def _check_eps(eps):
    if not (0 < eps <= 1e-6):
        raise ValueError("eps must lie in (0, 1e-6]")


def log_weight_scan(spec, x, eps, cap=ONE_MODE_CAP):
    """Unnormalized log weights lw[M] = M ln x - ln M! - 2 ln f(M)!.

    The scan extends until a geometric bound on the remaining mass falls
    three decades below ``eps`` times the accumulated mass, so the caller can
    truncate anywhere with a trustworthy tail estimate.  Returns
    ``(lws, tail_frac)`` where ``tail_frac`` bounds the unscanned mass as a
    fraction of the total.
    """
    if x == 0.0:
        return np.zeros(1), 0.0
    log_x = math.log(x)
    lws = [0.0]
    lff = 0.0
    ratios = [math.inf] * 3
    while True:
        m = len(lws)
        if m > cap:
            raise TruncationOverflow(
                f"tail mass still above eps={eps} at the {cap}-level cap"
            )
        lff += log_f(spec, m)
        lw = m * log_x - math.lgamma(m + 1.0) - 2.0 * lff
        ratios = ratios[1:] + [math.exp(min(lw - lws[-1], 700.0))]
        lws.append(lw)
        r = max(ratios)
        if r < 0.5:
            scale = max(lws)
            weights = np.exp(np.array(lws) - scale)
            tail = weights[-1] * r / (1.0 - r)
            total = float(weights.sum())
            if tail < eps * total * 1e-3:
                return np.array(lws), float(tail / (total + tail))


def _truncate_weights(lws, tail_frac, eps):
    """Smallest N with discarded mass below eps; returns (N, kept, discard).

    The discarded mass is accumulated as a suffix sum (small terms first), so
    tails far below the float resolution of the total are still resolved.
    """
    scale = float(np.max(lws))
    w = np.exp(lws - scale)
    total = float(w.sum())
    suffix = np.concatenate([np.cumsum(w[::-1])[::-1][1:], [0.0]])
    tail_abs = tail_frac * total
    discard = (suffix + tail_abs) / (total + tail_abs)
    idx = np.nonzero(discard < eps)[0]
    if idx.size == 0:
        raise TruncationOverflow("no truncation level reaches the requested eps")
    n = int(idx[0])
    return n, total - float(suffix[n]), float(discard[n])


def f_coherent(alpha, spec, eps=1e-12):
    """Deformed coherent state: c_n proportional to alpha^n / (sqrt(n!) f(n)!).

    Eigenstate of A = a f(n) with eigenvalue alpha; reduces to the Glauber
    coherent state for the identity deformation.
    """
    _check_eps(eps)
    alpha = complex(alpha)
    x = abs(alpha) ** 2
    if x == 0.0:
        return FockAmplitudes(np.array([1.0 + 0.0j]))
    lws, tail_frac = log_weight_scan(spec, x, eps)
    n, kept, discard = _truncate_weights(lws, tail_frac, eps)
    scale = float(np.max(lws))
    mags = np.exp(0.5 * (lws[: n + 1] - scale))
    phases = np.exp(1j * cmath.phase(alpha) * np.arange(n + 1))
    coeffs = mags * phases / math.sqrt(kept)
    return FockAmplitudes(coeffs, discard)


def check_compatibility(f1, f2, n_max):
    """Verify f1(n1,n2-1) f2(n1,n2) = f1(n1,n2) f2(n1-1,n2) on the grid.

    The identity makes the two deformed annihilation operators commute, so
    the two-mode recurrence has path-independent coefficients.  Returns
    ``(ok, first_violation)`` with the first violating (n1, n2) or None.
    """
    for n1 in range(1, n_max + 1):
        for n2 in range(1, n_max + 1):
            lhs = f1(n1, n2 - 1) * f2(n1, n2)
            rhs = f1(n1, n2) * f2(n1 - 1, n2)
            if lhs == rhs:
                continue
            if abs(lhs - rhs) > 1e-12 * max(abs(lhs), abs(rhs)):
                return False, (n1, n2)
    return True, None


def _pair_value(f, n1, n2, name):
    v = f(n1, n2)
    if not math.isfinite(v) or v <= 0:
        raise DeformationSingular(f"{name}({n1},{n2}) = {v!r}")
    return v


def _build_pair_grid(alpha1, alpha2, f1, f2, size, row_first):
    c = np.zeros((size, size), dtype=np.complex128)
    c[0, 0] = 1.0
    if row_first:
        for n2 in range(1, size):
            c[0, n2] = alpha2 * c[0, n2 - 1] / (
                math.sqrt(n2) * _pair_value(f2, 0, n2, "f2")
            )
        for n1 in range(1, size):
            for n2 in range(size):
                c[n1, n2] = alpha1 * c[n1 - 1, n2] / (
                    math.sqrt(n1) * _pair_value(f1, n1, n2, "f1")
                )
    else:
        for n1 in range(1, size):
            c[n1, 0] = alpha1 * c[n1 - 1, 0] / (
                math.sqrt(n1) * _pair_value(f1, n1, 0, "f1")
            )
        for n2 in range(1, size):
            for n1 in range(size):
                c[n1, n2] = alpha2 * c[n1, n2 - 1] / (
                    math.sqrt(n2) * _pair_value(f2, n1, n2, "f2")
                )
    return c


def two_mode_f_coherent_general(alpha1, alpha2, f1, f2, eps=1e-12):
    """Two-mode deformed coherent state for a general compatible pair f1, f2.

    Coefficients are grown by the recurrence
        C_{n1,n2} = alpha_i C_{..-1} / (sqrt(n_i) f_i(n1,n2))
    along both index orders; a relative disagreement above 1e-10 anywhere
    means the pair violates the commutation condition.
    """
    _check_eps(eps)
    alpha1, alpha2 = complex(alpha1), complex(alpha2)
    size = 32
    while True:
        a = _build_pair_grid(alpha1, alpha2, f1, f2, size, row_first=True)
        b = _build_pair_grid(alpha1, alpha2, f1, f2, size, row_first=False)
        diff = np.abs(a - b)
        ref = np.maximum(np.abs(a), np.abs(b))
        bad = diff > 1e-10 * ref
        if np.any(bad):
            n1, n2 = np.argwhere(bad)[0]
            raise IncompatibleDeformation(
                f"recurrence paths disagree at (n1,n2)=({n1},{n2})"
            )
        w = np.abs(a) ** 2
        total = float(w.sum())
        border = float(w[-1, :].sum() + w[:, -1].sum())
        if border < 0.25 * eps * total:
            break
        if size >= TWO_MODE_CAP:
            raise TruncationOverflow(
                f"tail mass still above eps={eps} at the {TWO_MODE_CAP}-level cap"
            )
        size = min(2 * size, TWO_MODE_CAP)

    row_mass = w.sum(axis=1)
    col_mass = w.sum(axis=0)
    n1 = int(np.nonzero(np.cumsum(row_mass) > total * (1 - eps / 4))[0][0])
    n2 = int(np.nonzero(np.cumsum(col_mass) > total * (1 - eps / 4))[0][0])
    block = a[: n1 + 1, : n2 + 1]
    kept = float(np.sum(np.abs(block) ** 2))
    return TwoModeAmplitudes(block / math.sqrt(kept), 1.0 - kept / total)


def two_mode_f_coherent_total(alpha1, alpha2, spec, eps=1e-12):
    """Two-mode state with the deformation acting on the total photon number.

    C_{n1,n2} proportional to alpha1^n1 alpha2^n2 / (sqrt(n1! n2!) f(n1+n2)!).
    The mass of the shell n1+n2 = M equals the one-mode weight at
    x = |alpha1|^2 + |alpha2|^2, so truncation is controlled per shell.
    """
    _check_eps(eps)
    alpha1, alpha2 = complex(alpha1), complex(alpha2)
    x1, x2 = abs(alpha1) ** 2, abs(alpha2) ** 2
    if x1 + x2 == 0.0:
        return TwoModeAmplitudes(np.array([[1.0 + 0.0j]]))
    lws, tail_frac = log_weight_scan(spec, x1 + x2, eps, cap=TWO_MODE_CAP)
    m_top, _, discard = _truncate_weights(lws, tail_frac, eps)

    n = np.arange(m_top + 1)
    half_lgam = 0.5 * np.array([math.lgamma(k + 1.0) for k in n])
    t1 = np.where(n == 0, 0.0, n * math.log(x1) / 2) if x1 > 0 else np.where(
        n == 0, 0.0, -np.inf
    )
    t2 = np.where(n == 0, 0.0, n * math.log(x2) / 2) if x2 > 0 else np.where(
        n == 0, 0.0, -np.inf
    )
    lff = np.zeros(2 * m_top + 1)
    acc = 0.0
    for k in range(1, m_top + 1):
        acc += log_f(spec, k)
        lff[k] = acc
    log_mag = (
        (t1 - half_lgam)[:, None]
        + (t2 - half_lgam)[None, :]
        - lff[np.add.outer(n, n)]
    )
    log_mag[np.add.outer(n, n) > m_top] = -np.inf
    scale = float(np.max(log_mag))
    mags = np.exp(log_mag - scale)
    ph1 = np.exp(1j * cmath.phase(alpha1) * n) if x1 > 0 else np.ones(m_top + 1)
    ph2 = np.exp(1j * cmath.phase(alpha2) * n) if x2 > 0 else np.ones(m_top + 1)
    c = mags * ph1[:, None] * ph2[None, :]
    kept = float(np.sum(np.abs(c) ** 2))
    return TwoModeAmplitudes(c / math.sqrt(kept), discard)


def cat_superposition(alpha, spec, sign, eps=1e-12):
    """Even/odd superposition N(|alpha alpha> +/- |-alpha -alpha>).

    Only coefficients whose total photon number parity matches ``sign``
    survive.  Raises DegenerateSuperposition when the two branches cancel
    (squared norm of the unnormalized sum below 1e-14).
    """
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    base = two_mode_f_coherent_total(alpha, alpha, spec, eps)
    n1, n2 = base.shape
    parity = (-1.0) ** np.add.outer(np.arange(n1), np.arange(n2))
    masked = base.coeffs * (1.0 + sign * parity)
    norm2 = float(np.sum(np.abs(masked) ** 2))
    if norm2 < 1e-14:
        raise DegenerateSuperposition(
            f"branches cancel for alpha={alpha}, sign={sign:+d}"
        )
    tail = min(1.0, 4.0 * base.trunc_tail / norm2)
    return TwoModeAmplitudes(masked / math.sqrt(norm2), tail)


def classical_evolution(a0, f_of_energy, t):
    """Classical trajectory alpha(t) = alpha(0) e^(-i omega(E) t), E = |alpha|^2.

    The vibration frequency is omega(E) = d(E f^2(E))/dE, differentiated
    numerically (central difference, step 1e-6 max(E, 1); one-sided at E=0).
    |alpha(t)| = |alpha(0)| by construction.
    """
    alpha0 = a0.alpha if isinstance(a0, ClassicalAmplitude) else complex(a0)
    energy = abs(alpha0) ** 2

    def g(e):
        return e * f_of_energy(e) ** 2

    h = 1e-6 * max(energy, 1.0)
    if energy - h >= 0.0:
        omega = (g(energy + h) - g(energy - h)) / (2.0 * h)
    else:
        omega = (g(energy + h) - g(energy)) / h
    return alpha0 * cmath.exp(-1j * omega * t)
