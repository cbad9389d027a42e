"""Timing comparison of the numba kernels against the numpy fallbacks.

Usage:
    python3 benchmarks/bench_backends.py [--repeats 5]

Covers the three hot paths: the dense symmetric eigensolver, the
balance-mask kernels, and one end-to-end enumeration verifier.
"""

import argparse
import time

import numpy as np

from signed_spectra import enumerate_bipartite_extrema, verify_complete_bipartite_max
from signed_spectra._kernels import (
    eigvalsh_desc,
    krs_parity_balanced,
    krs_structural_balanced,
    warmup,
)

BACKENDS = ("numba", "numpy")


def best_of(repeats, fn):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_eigensolver(repeats):
    rng = np.random.default_rng(0)
    print("eigensolver (1000 solves per size, best of %d)" % repeats)
    print(f"{'order':>6} {'numba':>12} {'numpy':>12} {'ratio':>7}")
    for n in (4, 8, 12, 16):
        mats = [rng.normal(size=(n, n)) for _ in range(1000)]
        mats = [m + m.T for m in mats]
        results = {}
        for backend in BACKENDS:
            def run(backend=backend):
                for m in mats:
                    eigvalsh_desc(m, backend=backend)
            results[backend] = best_of(repeats, run)
        ratio = results["numpy"] / results["numba"]
        print(
            f"{n:>6} {results['numba'] * 1e3:>10.2f}ms {results['numpy'] * 1e3:>10.2f}ms {ratio:>6.2f}x"
        )


def bench_balance_masks(repeats):
    masks = np.arange(1 << 16, dtype=np.int64)
    print("\nbalance kernels on all 65536 signatures of K_{4,4} (best of %d)" % repeats)
    print(f"{'kernel':>12} {'numba':>12} {'numpy':>12} {'ratio':>7}")
    for name, fn in (("parity", krs_parity_balanced), ("structural", krs_structural_balanced)):
        results = {}
        for backend in BACKENDS:
            results[backend] = best_of(
                repeats, lambda backend=backend: fn(masks, 4, 4, backend=backend)
            )
        ratio = results["numpy"] / results["numba"]
        print(
            f"{name:>12} {results['numba'] * 1e3:>10.2f}ms {results['numpy'] * 1e3:>10.2f}ms {ratio:>6.2f}x"
        )


def bench_end_to_end(repeats):
    print("\nend-to-end verifiers (best of %d)" % repeats)
    print(f"{'run':>24} {'numba':>12} {'numpy':>12} {'ratio':>7}")
    jobs = (
        ("thm-5.2 K_{3,5}", lambda b: verify_complete_bipartite_max(3, 5, backend=b)),
        ("thm-6.1 order 7", lambda b: enumerate_bipartite_extrema(7, "MIN", workers=1, backend=b)),
    )
    for name, job in jobs:
        results = {}
        for backend in BACKENDS:
            results[backend] = best_of(repeats, lambda backend=backend: job(backend))
        ratio = results["numpy"] / results["numba"]
        print(
            f"{name:>24} {results['numba'] * 1e3:>10.2f}ms {results['numpy'] * 1e3:>10.2f}ms {ratio:>6.2f}x"
        )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    print("warming up JIT kernels...")
    warmup("numba")
    bench_eigensolver(args.repeats)
    bench_balance_masks(args.repeats)
    bench_end_to_end(args.repeats)


if __name__ == "__main__":
    main()
