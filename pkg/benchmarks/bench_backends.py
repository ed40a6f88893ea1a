#!/usr/bin/env python3
"""Time the numba kernels against the pure-numpy fallback.

Usage: python3 benchmarks/bench_backends.py [--repeat N]
The first numba call compiles, so every kernel is warmed up before timing.
"""

import argparse
import time

import numpy as np

from diamondflow import _kernels as K


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=7)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    up0 = rng.uniform(-0.9, 0.9, 4000)
    um0 = up0 - rng.uniform(0.0, 0.05, 4000)
    t = np.linspace(-2.0, 2.0, 501)
    up_f = rng.uniform(-0.99, 0.99, 400_000)
    um_f = up_f - rng.uniform(0.0, 0.005, 400_000)

    cases = [
        ("diamond_orbit_grid (4000x501)",
         lambda: K.diamond_orbit_grid(up0, um0, 1.0, t)),
        ("field_grid (400k points)",
         lambda: K.field_grid(up_f, um_f, 1.0)),
        ("rk4_diamond (200k steps)",
         lambda: K.rk4_diamond(0.3, -0.4, 1.0, 2.0, 200_000)),
    ]

    backends = [b for b in ("numpy", "numba") if b in K.available_backends()]
    results = {}
    for backend in backends:
        K.set_backend(backend)
        for name, fn in cases:
            fn()  # warm-up; compiles on the numba path
            results[(backend, name)] = best_of(fn, args.repeat)

    width = max(len(name) for name, _ in cases)
    header = f"{'kernel':<{width}}  " + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name, _ in cases:
        row = f"{name:<{width}}  "
        for b in backends:
            row += f"{results[(b, name)] * 1e3:>10.2f}ms"
        if len(backends) == 2:
            row += f"{results[('numpy', name)] / results[('numba', name)]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
