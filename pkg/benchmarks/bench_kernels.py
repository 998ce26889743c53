#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Runs each hot kernel on a figure-scale workload and prints the per-call
time for both backends plus the speedup.  Usage:

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import math
import statistics
import time

import numpy as np

from ftomo.kernels import py_kernels

try:
    from ftomo.kernels import _core
except ImportError:
    _core = None


def timeit(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def workloads():
    rng = np.random.default_rng(42)
    xs = np.arange(-6.0, 6.0 + 1e-9, 0.05)
    thetas = np.arange(0.0, 2 * math.pi, 2 * math.pi / 360.0)
    coeffs = rng.normal(size=61) + 1j * rng.normal(size=61)
    coeffs /= np.linalg.norm(coeffs)
    log_fact = np.array([math.lgamma(k + 1.0) for k in range(192)])

    def photon_sweep(mod):
        return sum(
            abs(mod.photon_amplitude(coeffs, n, 0.8 + 0.4j, log_fact)) ** 2
            for n in range(128)
        )

    return [
        ("hermite table 61 x 241", lambda m: m.hermite_functions(60, xs)),
        (
            "optical grid 360 x 241, 61 levels",
            lambda m: m.optical_tomogram_grid(coeffs, xs, thetas),
        ),
        (
            "laguerre degrees 0..128",
            lambda m: m.laguerre_all_degrees(128, 3.0, 2.0),
        ),
        ("photon tomogram sweep n<=127", photon_sweep),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=7)
    args = parser.parse_args()

    if _core is None:
        print("compiled kernels not built (pip install -e . rebuilds them);")
        print("timing the numpy fallback only\n")

    print(f"{'kernel':38s} {'numpy':>12s} {'compiled':>12s} {'speedup':>9s}")
    for name, fn in workloads():
        t_py = timeit(lambda: fn(py_kernels), args.repeat)
        if _core is not None:
            t_c = timeit(lambda: fn(_core), args.repeat)
            # guard against drift between the two implementations
            ref, got = fn(py_kernels), fn(_core)
            assert np.allclose(ref, got, rtol=1e-12, atol=1e-12)
            print(f"{name:38s} {t_py * 1e3:10.3f}ms {t_c * 1e3:10.3f}ms "
                  f"{t_py / t_c:8.1f}x")
        else:
            print(f"{name:38s} {t_py * 1e3:10.3f}ms {'-':>12s} {'-':>9s}")


if __name__ == "__main__":
    main()
