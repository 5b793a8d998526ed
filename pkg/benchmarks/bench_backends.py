#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python twins.

Runs each hot loop on both backends with identical inputs, checks the
outputs agree, and prints wall-clock times with the speedup factor.

    python benchmarks/bench_backends.py [--quick]
"""

from __future__ import annotations

import argparse
import time

from parkstat import _kernels_pure as pure
from parkstat.exactalg import binomial_rows

try:
    from parkstat import _kernels_c as compiled
except ImportError:
    compiled = None


def run_brute(kernels, n, a):
    base = n + a - 1
    return kernels.brute_area_counts(n, a, 1, base + 1)


def run_count(kernels, n_max):
    binom = binomial_rows(n_max)
    prev = [1]
    for s in range(1, n_max + 2):
        prev = kernels.count_step(prev, s, n_max, binom)
    return prev


def run_genfun(kernels, n_max):
    binom = binomial_rows(n_max)
    prev = [[1]]
    for s in range(1, n_max + 2):
        prev = kernels.genfun_step(prev, s, n_max, binom)
    return prev


def run_jets(kernels, n_max, order):
    binom = binomial_rows(n_max)
    unit = [0] * (order + 1)
    unit[0] = 1
    prev = [unit]
    for s in range(1, n_max + 2):
        prev = kernels.jet_step(prev, s, n_max, order, binom)
    return prev


def bench(name, fn, *args):
    t0 = time.perf_counter()
    pure_result = fn(pure, *args)
    t_pure = time.perf_counter() - t0
    if compiled is None:
        print(f"{name:<26} pure {t_pure:8.3f}s   (extension not built)")
        return
    t0 = time.perf_counter()
    c_result = fn(compiled, *args)
    t_c = time.perf_counter() - t0
    match = "ok" if c_result == pure_result else "MISMATCH"
    print(f"{name:<26} pure {t_pure:8.3f}s   compiled {t_c:8.3f}s   "
          f"x{t_pure / t_c:6.1f}   {match}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true",
                        help="smaller workloads (CI-friendly)")
    args = parser.parse_args()

    if args.quick:
        sizes = {"brute": (6, 1), "count": 80, "genfun": 30, "jets": (60, 4)}
    else:
        sizes = {"brute": (7, 2), "count": 200, "genfun": 60, "jets": (150, 6)}

    print(f"workloads: brute {sizes['brute']}, count n={sizes['count']}, "
          f"genfun n={sizes['genfun']}, jets (n, K)={sizes['jets']}")
    bench("brute-force enumeration", run_brute, *sizes["brute"])
    bench("counting sweep", run_count, sizes["count"])
    bench("generating-function sweep", run_genfun, sizes["genfun"])
    bench("jet sweep", run_jets, *sizes["jets"])


if __name__ == "__main__":
    main()
