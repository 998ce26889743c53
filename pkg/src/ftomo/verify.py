"""Self-verification suite behind ``ftomo verify``.

Each named check exercises one correctness contract of the library at a
fixed tolerance and reports the measured residual.  The state sample is
pseudo-random but fully seeded, so reports are reproducible.
"""

import math
import time

import numpy as np

from . import figures
from .deformation import DeformationSpec
from .entanglement import (
    cat_entropy_identity_limit,
    cat_linear_entropy,
    kerr_zero_entropy,
    linear_entropy,
    linear_entropy_series,
    reduce_mode2,
)
from .entropy import displaced_fock_pmf, shannon_information, verify_laguerre_inequality
from .kernels import BACKEND
from .states import FockAmplitudes, TwoModeAmplitudes, f_coherent
from .tomography import (
    husimi,
    optical_tomogram,
    photon_tomogram,
    symplectic_tomogram,
)
from .uncertainty import (
    deformed_quadrature_stats,
    moment_from_optical_tomogram,
    qosc_small_lambda_rhs,
)


def _random_state(rng, dim):
    c = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return FockAmplitudes(c / np.linalg.norm(c))


def _closed_form_symplectic(coeffs, xs, mu, nu):
    """Reference symplectic tomogram via raw Hermite polynomials.

    M = e^(-X^2/s^2)/sqrt(pi s^2) |sum_n c_n/sqrt(n!) z^n H_n(X/s)|^2 with
    z = (mu - i nu)/(sqrt(2) s); safe for the small states used here.
    """
    s2 = mu * mu + nu * nu
    s = math.sqrt(s2)
    u = np.asarray(xs) / s
    z = (mu - 1j * nu) / (math.sqrt(2.0) * s)
    h_prev = np.ones_like(u)
    amp = coeffs[0] * h_prev.astype(complex)
    h_cur = 2.0 * u
    zp = z
    fact = 1.0
    for n in range(1, len(coeffs)):
        amp = amp + coeffs[n] / math.sqrt(fact * n) * zp * h_cur
        fact *= n
        h_next = 2.0 * u * h_cur - 2.0 * n * h_prev
        h_prev, h_cur = h_cur, h_next
        zp = zp * z
    return np.exp(-u * u) / math.sqrt(math.pi * s2) * np.abs(amp) ** 2


def check_tomogram_oracle():
    """Closed-form symplectic tomogram vs the phase-evolved eigenfunction sum."""
    rng = np.random.default_rng(101)
    xs = np.arange(-6.0, 6.0 + 1e-9, 0.05)
    directions = [
        (math.cos(t), math.sin(t))
        for t in np.linspace(0.0, 2 * math.pi, 8, endpoint=False)
    ]
    directions = [(m * r, n * r) for (m, n), r in zip(directions, [1, 0.5, 2, 1, 1.5, 1, 0.8, 1.2])]
    worst = 0.0
    for _ in range(20):
        state = _random_state(rng, 12)
        for mu, nu in directions:
            ref = _closed_form_symplectic(state.coeffs, xs, mu, nu)
            got = symplectic_tomogram(state, xs, mu, nu)
            worst = max(worst, float(np.max(np.abs(got - ref))))
    return worst, worst < 1e-8, "max |closed form - eigenfunction route|"


def check_normalization():
    """Tomogram normalizations: integrals over X and the photon-number sum."""
    rng = np.random.default_rng(202)
    xs = np.linspace(-12.0, 12.0, 4001)
    trap = getattr(np, "trapezoid", None) or np.trapz
    worst = 0.0
    for _ in range(6):
        state = _random_state(rng, 14)
        theta = float(rng.uniform(0, 2 * math.pi))
        w = optical_tomogram(state, xs, theta)
        worst = max(worst, abs(float(trap(w, xs)) - 1.0))
        mu, nu = rng.normal(), rng.normal()
        if mu * mu + nu * nu < 1e-6:
            mu = 1.0
        # the support scales with s = sqrt(mu^2 + nu^2); widen the window
        scale = max(1.0, math.hypot(mu, nu))
        m = symplectic_tomogram(state, xs * scale, mu, nu)
        worst = max(worst, abs(float(trap(m, xs * scale)) - 1.0))
    state = _random_state(rng, 12)
    for alpha in (0.0, 0.7 + 0.3j, -1.4j, 2.0):
        total = sum(photon_tomogram(state, n, alpha) for n in range(129))
        worst = max(worst, abs(total - 1.0))
    return worst, worst < 1e-8, "max |normalization - 1|"


def check_husimi_identity():
    """Q(alpha) = photon tomogram at n = 0 with reflected argument."""
    rng = np.random.default_rng(303)
    axis = np.linspace(-2.0, 2.0, 21)
    worst = 0.0
    for _ in range(5):
        state = _random_state(rng, 10)
        for re in axis:
            for im in axis:
                a = complex(re, im)
                worst = max(
                    worst, abs(husimi(state, a) - photon_tomogram(state, 0, -a))
                )
    return worst, worst < 1e-12, "max |Q(a) - W(0, -a)|"


def check_laguerre_inequality():
    """Entropic inequalities for the Laguerre weights, s = 2, 3, 4."""
    worst_lhs = math.inf
    worst_gap = 0.0
    for n in range(6):
        for x in (0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0):
            for s in (2, 3, 4):
                res = verify_laguerre_inequality(n, x, s)
                worst_lhs = min(worst_lhs, res.lhs)
                info = shannon_information(displaced_fock_pmf(n, x), s)
                worst_gap = max(worst_gap, abs(res.lhs - math.exp(x) * info))
                if not res.holds:
                    return res.lhs, False, f"violated at n={n}, x={x}, s={s}"
    if worst_gap > 1e-8:
        return worst_gap, False, "lambda-form lhs != e^x I"
    return worst_lhs, True, "min lhs (>= -1e-10) over the sweep"


def check_information_curves():
    """Oscillation/decay structure of the information curves."""
    xs = figures.INFO_X_GRID
    detail = []
    ok = True
    for n in (0, 1, 2):
        curve = np.array(
            [shannon_information(displaced_fock_pmf(n, x), 2) for x in xs]
        )
        if curve.min() < -1e-12:
            ok = False
        tail = shannon_information(displaced_fock_pmf(n, 36.0), 2)
        if tail >= 5e-2:
            ok = False
        inner = (curve[1:-1] > curve[:-2]) & (curve[1:-1] > curve[2:])
        n_max = int(inner.sum())
        detail.append(f"n={n}: {n_max} maxima, I(36)={tail:.3g}")
        if n == 0 and n_max > 1:
            ok = False
        if n >= 1 and n_max < 2:
            ok = False
    return 0.0, ok, "; ".join(detail)


_ORACLE_LAMBDAS = (0.2, 0.5, 1.0, 2.0, 5.0)
_ORACLE_ALPHAS = (0.5, 1.0, 2.0)


def check_entanglement_oracle():
    """Series route vs partial-trace route for the two-mode linear entropy."""
    worst = 0.0
    for lam in _ORACLE_LAMBDAS:
        spec = DeformationSpec.kerr(lam)
        for a1 in _ORACLE_ALPHAS:
            for a2 in _ORACLE_ALPHAS:
                from .states import two_mode_f_coherent_total

                s_ref = linear_entropy(
                    reduce_mode2(two_mode_f_coherent_total(a1, a2, spec))
                )
                s_ser = linear_entropy_series(a1, a2, spec)
                worst = max(worst, abs(s_ref - s_ser))
    return worst, worst < 1e-8, "max |series - partial trace|"


def check_limit_values():
    """Closed-form limit values of the entanglement entropies."""
    worst = 0.0
    ok = True
    s_plus = cat_linear_entropy(1.0, DeformationSpec.kerr(1e-4), +1)
    s_minus = cat_linear_entropy(1.0, DeformationSpec.kerr(1e-4), -1)
    ok &= abs(s_plus) < 1e-3 and abs(s_minus - 0.5) < 1e-3
    worst = max(worst, abs(s_plus), abs(s_minus - 0.5))

    big = DeformationSpec.kerr(1e6)
    for a in (0.5, 1.0, 2.0):
        d_minus = abs(cat_linear_entropy(a, big, -1) - 0.5)
        d_plus = abs(
            cat_linear_entropy(a, big, +1) - cat_entropy_identity_limit(a, +1)
        )
        ok &= d_minus <= 1e-4 and d_plus <= 1e-4

    three = TwoModeAmplitudes(
        np.array([[1.0, 1.0], [1.0, 0.0]], dtype=complex) / math.sqrt(3.0)
    )
    d_zero = abs(kerr_zero_entropy(1.0, 1.0) - linear_entropy(reduce_mode2(three)))
    ok &= d_zero < 1e-10
    worst = max(worst, d_zero)
    return worst, ok, "cat limits at lam=1e-4/1e6 and the lam=0 closed form"


def check_entanglement_monotonic():
    """Monotone decay in lambda; entropy peak drifts right as lambda grows."""
    lams = [round(0.1 * k, 10) for k in range(1, 51)]
    vals = [
        linear_entropy_series(1.0, 1.0, DeformationSpec.kerr(lam)) for lam in lams
    ]
    decreasing = all(b < a for a, b in zip(vals, vals[1:]))
    argmaxes = []
    for lam in (0.5, 1.0, 2.0):
        spec = DeformationSpec.kerr(lam)
        curve = [
            linear_entropy_series(a1, 1.0, spec) for a1 in figures.ALPHA1_GRID
        ]
        argmaxes.append(figures.ALPHA1_GRID[int(np.argmax(curve))])
    shifting = argmaxes[0] < argmaxes[1] < argmaxes[2]
    ok = decreasing and shifting
    return 0.0, ok, f"decreasing={decreasing}, peak |a1| at {argmaxes}"


def _sr_test_matrix():
    states = [
        FockAmplitudes.vacuum(),
        FockAmplitudes.fock(1),
        FockAmplitudes.fock(5),
        FockAmplitudes.fock(10),
        f_coherent(0.5, DeformationSpec.identity()),
        f_coherent(2.0 * 1j, DeformationSpec.identity()),
        f_coherent(1.0 + 1.0j, DeformationSpec.identity()),
        f_coherent(1.0, DeformationSpec.kerr(1.0)),
    ]
    specs = [
        DeformationSpec.identity(),
        DeformationSpec.qosc(0.1),
        DeformationSpec.qosc(0.3),
        DeformationSpec.kerr(0.3),
        DeformationSpec.kerr(1.0),
        DeformationSpec.kerr(5.0),
    ]
    return states, specs


def check_uncertainty():
    """SR inequality, the exact vacuum bound, and the lam^4 expansion error."""
    states, specs = _sr_test_matrix()
    worst_resid = math.inf
    for state in states:
        for spec in specs:
            st = deformed_quadrature_stats(state, spec)
            worst_resid = min(worst_resid, st.sr_lhs - st.sr_rhs)
    if worst_resid < -1e-10:
        return worst_resid, False, "SR inequality violated"

    vac = FockAmplitudes.vacuum()
    for lam in (0.0, 0.1, 0.3):
        got = qosc_small_lambda_rhs(vac, lam)
        if abs(got - 0.25 * (1 + lam * lam / 3.0)) > 1e-12:
            return got, False, f"vacuum qosc bound wrong at lam={lam}"

    probe = f_coherent(1.0, DeformationSpec.identity())
    ref = abs(
        deformed_quadrature_stats(probe, DeformationSpec.qosc(0.1)).sr_rhs
        - qosc_small_lambda_rhs(probe, 0.1)
    )
    coef = ref / 0.1**4
    for lam in (0.05, 0.02, 0.01):
        diff = abs(
            deformed_quadrature_stats(probe, DeformationSpec.qosc(lam)).sr_rhs
            - qosc_small_lambda_rhs(probe, lam)
        )
        ratio = diff / (coef * lam**4)
        if not (0.5 <= ratio <= 2.0):
            return ratio, False, f"lam^4 scaling broke at lam={lam}"
    return worst_resid, True, "min (sr_lhs - sr_rhs) over the matrix"


def check_moment_constant(force_alt=False):
    """Tomographic moment formula vs the operator value; the +1/12 variant
    must sit exactly 1/4 above it."""
    from .tomography import photon_moment

    constant = "plus-twelfth" if force_alt else "corrected"
    worst = 0.0
    cases = [
        (FockAmplitudes.vacuum(), 1.0 / 3.0),
        (FockAmplitudes.fock(1), 7.0 / 3.0),
        (f_coherent(1.0, DeformationSpec.identity()), None),
    ]
    for state, expect in cases:
        if expect is None:
            expect = photon_moment(state, 2) + photon_moment(state, 1) + 1.0 / 3.0
        got = moment_from_optical_tomogram(state, constant)
        worst = max(worst, abs(got - expect))
        dev = moment_from_optical_tomogram(state, "plus-twelfth") - (
            moment_from_optical_tomogram(state, "corrected")
        )
        worst_dev = abs(dev - 0.25)
        if worst_dev > 1e-9:
            return worst_dev, False, "+1/12 variant does not sit 1/4 above"
    return worst, worst < 1e-6, f"max |formula({constant}) - operator value|"


def check_determinism():
    """Two renders of a figure CSV must be byte-identical."""
    a = figures.figure_csv_text(4).encode()
    b = figures.figure_csv_text(4).encode()
    return 0.0, a == b, f"{len(a)} bytes compared"


CHECKS = {
    "tomogram-oracle": check_tomogram_oracle,
    "normalization": check_normalization,
    "husimi-identity": check_husimi_identity,
    "laguerre-inequality": check_laguerre_inequality,
    "information-curves": check_information_curves,
    "entanglement-oracle": check_entanglement_oracle,
    "limit-values": check_limit_values,
    "entanglement-monotonic": check_entanglement_monotonic,
    "uncertainty": check_uncertainty,
    "moment-constant": check_moment_constant,
    "determinism": check_determinism,
}


def run_checks(only=None, force_alt_moment=False):
    """Run the named checks (all by default); returns the JSON-ready report."""
    names = list(CHECKS)
    if only:
        unknown = [n for n in only if n not in CHECKS]
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(unknown)}")
        names = [n for n in names if n in set(only)]
    t0 = time.perf_counter()
    results = []
    for name in names:
        fn = CHECKS[name]
        start = time.perf_counter()
        if name == "moment-constant":
            residual, passed, detail = fn(force_alt=force_alt_moment)
        else:
            residual, passed, detail = fn()
        results.append(
            {
                "name": name,
                "passed": bool(passed),
                "residual": float(residual),
                "detail": detail,
                "runtime_s": round(time.perf_counter() - start, 3),
            }
        )
    return {
        "backend": BACKEND,
        "checks": results,
        "passed": all(r["passed"] for r in results),
        "runtime_s": round(time.perf_counter() - t0, 3),
    }
