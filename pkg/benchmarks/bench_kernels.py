#!/usr/bin/env python3
"""Benchmark the compiled statistic kernels against the numpy fallback.

Times `one_sample_stats` and `two_sample_stats` on synthetic Weibull
trials of growing size and prints a speedup table.  Run after an
editable install:

    python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from refcurve import _kernels_py

try:
    from refcurve import _kernels_cy
except ImportError:
    _kernels_cy = None


def make_trial(rng, n):
    half = n // 2
    ta = rng.weibull(1.0, half)
    tb = rng.weibull(1.0, n - half)
    ca = rng.uniform(1.0, 4.0, half)
    cb = rng.uniform(1.0, 4.0, n - half)
    return (np.minimum(ta, ca), ta <= ca,
            np.minimum(tb, cb), tb <= cb)


def bench(fn, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    rng = np.random.default_rng(7)
    sizes = [100, 1_000, 10_000, 100_000, 500_000]
    print(f"{'n':>8}  {'kernel':<16} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for n in sizes:
        args = make_trial(rng, n)
        repeats = max(3, int(2_000_000 / n))
        for name, py_fn, cy_fn in [
            ("one_sample_stats", _kernels_py.one_sample_stats,
             getattr(_kernels_cy, "one_sample_stats", None)),
            ("two_sample_stats", _kernels_py.two_sample_stats,
             getattr(_kernels_cy, "two_sample_stats", None)),
        ]:
            t_py = bench(py_fn, args, repeats)
            if cy_fn is None:
                print(f"{n:>8}  {name:<16} {t_py*1e6:>9.1f}u {'n/a':>10} {'n/a':>8}")
                continue
            t_cy = bench(cy_fn, args, repeats)
            print(f"{n:>8}  {name:<16} {t_py*1e6:>9.1f}u {t_cy*1e6:>9.1f}u "
                  f"{t_py/t_cy:>7.1f}x")


if __name__ == "__main__":
    main()
