"""Symplectic, optical and photon-number tomograms, Husimi function, moments.

Every tomogram is a modulus squared, hence nonnegative by construction.  The
optical tomogram is the workhorse: it equals the position density of the
state evolved for a phase theta, i.e. |sum_n c_n e^(-i n theta) psi_n(X)|^2
(the global e^(-i theta/2) phase drops inside the modulus).  The symplectic
tomogram follows from it by the scaling rule
    M(X, mu, nu) = w(X / s, theta) / s,   s = sqrt(mu^2 + nu^2),
with theta resolved by atan2(nu, mu).
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateDirection
from .kernels import optical_tomogram_grid, photon_amplitude

# Quadrature window for moment integrals.  Wide enough that every state
# supported below ~70 quanta (turning point sqrt(2n+1) < 12) has negligible
# mass outside.
MOMENT_GRID = (-12.0, 12.0, 4001)

_trapezoid = getattr(np, "trapezoid", None) or np.trapz


def optical_tomogram(state, x, theta):
    """w(X, theta) for a one-mode state; 2pi-periodic in theta.

    ``x`` may be a scalar or an array.
    """
    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    vals = optical_tomogram_grid(state.coeffs, xs, np.array([float(theta)]))[0]
    return float(vals[0]) if np.ndim(x) == 0 else vals


def optical_tomogram_on_grid(state, xs, thetas):
    """w on the full (theta, X) product grid; shape (len(thetas), len(xs))."""
    return optical_tomogram_grid(
        state.coeffs,
        np.ascontiguousarray(xs, dtype=np.float64),
        np.ascontiguousarray(thetas, dtype=np.float64),
    )


def symplectic_tomogram(state, x, mu, nu):
    """M(X, mu, nu), the density of the observable mu q + nu p."""
    s2 = mu * mu + nu * nu
    if s2 < 1e-300:
        raise DegenerateDirection("mu^2 + nu^2 vanishes")
    s = math.sqrt(s2)
    theta = math.atan2(nu, mu)
    return optical_tomogram(state, np.asarray(x) / s, theta) / s


def photon_tomogram(state, n, alpha):
    """Probability of n photons in the state displaced by -alpha.

    Two-branch associated-Laguerre sum over the state's own truncation; all
    factorial ratios are evaluated in log space.  At alpha = 0 this is the
    photon probability |c_n|^2.
    """
    if n < 0:
        raise ValueError("photon count must be nonnegative")
    alpha = complex(alpha)
    if alpha == 0:
        return float(abs(state.coeffs[n]) ** 2) if n < state.n_levels else 0.0
    top = max(n, state.n_levels - 1)
    log_fact = np.array([math.lgamma(k + 1.0) for k in range(top + 1)])
    amp = photon_amplitude(state.coeffs, n, alpha, log_fact)
    return abs(amp) ** 2


def photon_tomogram_fock(m, n, alpha):
    """Closed form for the input Fock state |m>: symmetric under m <-> n.

    For j = max(m, n), k = min(m, n):
        (k!/j!) |alpha|^(2(j-k)) e^(-|alpha|^2) [L_k^(j-k)(|alpha|^2)]^2.
    """
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    x = abs(complex(alpha)) ** 2
    if x == 0.0:
        return 1.0 if m == n else 0.0
    k, j = min(m, n), max(m, n)
    from .kernels import laguerre_all_degrees

    lag = float(laguerre_all_degrees(k, j - k, x)[k])
    log_mag = math.lgamma(k + 1.0) - math.lgamma(j + 1.0) + (j - k) * math.log(x) - x
    return math.exp(log_mag) * lag * lag


def husimi(state, alpha):
    """Husimi function Q(alpha) = e^(-|alpha|^2) |sum_m c_m (alpha*)^m / sqrt(m!)|^2.

    Agrees with photon_tomogram(state, 0, -alpha).
    """
    alpha = complex(alpha)
    x = abs(alpha) ** 2
    m = np.arange(state.n_levels)
    lgam = np.array([math.lgamma(k + 1.0) for k in m])
    if x == 0.0:
        return float(abs(state.coeffs[0]) ** 2)
    mags = np.exp(m * math.log(abs(alpha)) - 0.5 * lgam - 0.5 * x)
    phases = np.exp(-1j * np.angle(alpha) * m)
    amp = np.sum(state.coeffs * mags * phases)
    return float(abs(amp) ** 2)


def quadrature_moment(state, theta, k):
    """<X^k> at phase theta, by composite trapezoid over the moment window."""
    if k < 0 or k > 8:
        raise ValueError("quadrature moments supported for 0 <= k <= 8")
    lo, hi, npts = MOMENT_GRID
    xs = np.linspace(lo, hi, npts)
    w = optical_tomogram(state, xs, theta)
    return float(_trapezoid(xs**k * w, xs))


def photon_moment(state, k):
    """<n^k> from the photon-number distribution |c_n|^2."""
    if k < 0 or k > 6:
        raise ValueError("photon moments supported for 0 <= k <= 6")
    n = np.arange(state.n_levels, dtype=np.float64)
    return float(np.sum(np.abs(state.coeffs) ** 2 * n**k))


# ---------------------------------------------------------------------------
# Sampled grids and their CSV emission

from .csvio import fmt as _fmt


@dataclass(frozen=True)
class TomogramGrid:
    """Tomogram values sampled on a product grid of named axes."""

    kind: str
    axes: dict
    values: np.ndarray
    state_digest: str = ""
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        shape = tuple(len(v) for v in self.axes.values())
        if self.values.shape != shape:
            raise ValueError(f"values shape {self.values.shape} != axes {shape}")
        if np.any(self.values < 0):
            raise ValueError("tomogram values must be nonnegative")

    def rows(self):
        names = list(self.axes)
        grids = [np.asarray(self.axes[k]) for k in names]
        for idx in np.ndindex(self.values.shape):
            yield [grids[d][i] for d, i in enumerate(idx)] + [self.values[idx]]

    def write_csv(self, path, audit=False):
        names = list(self.axes) + ["value"]
        lines = [",".join(names)]
        for row in self.rows():
            lines.append(",".join(_fmt(v) for v in row))
        if audit:
            for name, value, ok in self.audit():
                lines.append(f"# audit,{name},{_fmt(value)},{'pass' if ok else 'fail'}")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")

    def audit(self):
        """Normalization/positivity checks over the emitted grid itself."""
        checks = [("min_value", float(self.values.min()), bool(self.values.min() >= 0))]
        if self.kind in ("optical", "symplectic"):
            xs = np.asarray(self.axes["X"])
            flat = self.values.reshape(-1, xs.size)
            integrals = _trapezoid(flat, xs, axis=1)
            worst = float(integrals[np.argmax(np.abs(integrals - 1.0))])
            checks.append(("integral_over_X", worst, bool(abs(worst - 1.0) < 1e-3)))
        elif self.kind == "photon_number":
            sums = self.values.sum(axis=0).reshape(-1)
            worst = float(sums[np.argmax(np.abs(sums - 1.0))])
            checks.append(("sum_over_n", worst, bool(abs(worst - 1.0) < 1e-3)))
        return checks


def optical_grid(state, xs, thetas):
    values = optical_tomogram_on_grid(state, xs, thetas)
    return TomogramGrid(
        "optical",
        {"theta": np.asarray(thetas), "X": np.asarray(xs)},
        values,
        state_digest=state.digest(),
        meta={"trunc_tail": state.trunc_tail},
    )


def symplectic_grid(state, xs, mu, nu):
    s2 = mu * mu + nu * nu
    if s2 < 1e-300:
        raise DegenerateDirection("mu^2 + nu^2 vanishes")
    s = math.sqrt(s2)
    theta = math.atan2(nu, mu)
    values = optical_tomogram_on_grid(state, np.asarray(xs) / s, [theta])[0] / s
    return TomogramGrid(
        "symplectic",
        {"mu": np.array([mu]), "nu": np.array([nu]), "X": np.asarray(xs)},
        values.reshape(1, 1, -1),
        state_digest=state.digest(),
        meta={"trunc_tail": state.trunc_tail},
    )


def photon_grid(state, ns, alphas_re, alphas_im):
    ns = np.asarray(ns, dtype=int)
    values = np.empty((ns.size, len(alphas_re), len(alphas_im)))
    for i, re in enumerate(alphas_re):
        for j, im in enumerate(alphas_im):
            a = complex(re, im)
            for k, n in enumerate(ns):
                values[k, i, j] = photon_tomogram(state, int(n), a)
    return TomogramGrid(
        "photon_number",
        {
            "n": ns,
            "re_alpha": np.asarray(alphas_re),
            "im_alpha": np.asarray(alphas_im),
        },
        values,
        state_digest=state.digest(),
        meta={"trunc_tail": state.trunc_tail},
    )


def husimi_grid(state, alphas_re, alphas_im):
    values = np.empty((len(alphas_re), len(alphas_im)))
    for i, re in enumerate(alphas_re):
        for j, im in enumerate(alphas_im):
            values[i, j] = husimi(state, complex(re, im))
    return TomogramGrid(
        "husimi",
        {"re_alpha": np.asarray(alphas_re), "im_alpha": np.asarray(alphas_im)},
        values,
        state_digest=state.digest(),
        meta={"trunc_tail": state.trunc_tail},
    )
