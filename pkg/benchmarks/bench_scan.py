#!/usr/bin/env python3
"""Benchmark the scan kernels: numba backend vs pure-numpy fallback.

Usage: python benchmarks/bench_scan.py [--n N] [--repeat R]
"""

import argparse
import time

import numpy as np


def time_backend(backend, n, repeat):
    from sloccgeo import _kernels
    from sloccgeo.i3322 import scan

    _kernels.set_backend(backend)
    scan(256, seed=0)  # warm up (JIT compile on the numba path)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = scan(n, seed=42)
        times.append(time.perf_counter() - t0)
    return min(times), res.summary


def time_stage(backend, n):
    from sloccgeo import _kernels

    _kernels.set_backend(backend)
    ids = np.arange(n, dtype=np.uint64)
    t0 = time.perf_counter()
    dirs = _kernels.sample_direction_sets(42, ids)
    t_sample = time.perf_counter() - t0
    rng = np.random.default_rng(1)
    mats = rng.standard_normal((n, 4, 4))
    t0 = time.perf_counter()
    _kernels.eigvals4_batch(mats)
    t_eig = time.perf_counter() - t0
    coords = rng.uniform(-1.2, 1.2, (n, 3))
    t0 = time.perf_counter()
    _kernels.hull_margins(coords)
    t_hull = time.perf_counter() - t0
    del dirs
    return t_sample, t_eig, t_hull


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=100_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = ["numpy"]
    try:
        import numba  # noqa: F401

        backends.insert(0, "numba")
    except ImportError:
        print("numba not installed; benchmarking the numpy fallback only")

    results = {}
    for backend in backends:
        total, summary = time_backend(backend, args.n, args.repeat)
        stages = time_stage(backend, args.n)
        results[backend] = (total, stages)
        print(
            f"{backend:>6}: scan n={args.n}: {total:8.3f}s "
            f"(sample {stages[0]:.3f}s, eig {stages[1]:.3f}s, hull {stages[2]:.3f}s)"
        )
        print(f"        min_margin={summary['min_margin']:.6g}")
    if len(results) == 2:
        speedup = results["numpy"][0] / results["numba"][0]
        print(f"numba speedup over numpy fallback: {speedup:.2f}x")


if __name__ == "__main__":
    main()
