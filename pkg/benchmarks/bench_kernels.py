#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Times the condensed pairwise computation (the similarity-network hot
loop) and the one-vs-many grid evaluation (the receptive-field hot
loop), for each comparison index, on both backends.

    python3 benchmarks/bench_kernels.py --n 800 --m 5 --grid 200
"""

import argparse
import time

import numpy as np

from propnorm._kernels import _py

try:
    from propnorm._kernels import _cy
except ImportError:
    _cy = None

KINDS = ("jaccard", "interiority", "coincidence", "mjaccard", "euclidean")
D, E = 5.0, 1.0


def best_of(repeats, fn, *args):
    best = np.inf
    for _ in range(repeats):
        started = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - started)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=800, help="rows for the pairwise benchmark")
    parser.add_argument("--m", type=int, default=5, help="feature count")
    parser.add_argument("--grid", type=int, default=200, help="grid side for one-vs-many")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    X = np.ascontiguousarray(rng.normal(0.0, 2.0, (args.n, args.m)))
    X[np.abs(X) < 0.05] = 1.0  # keep interiority defined everywhere
    reference = np.ascontiguousarray(np.full(args.m, 2.0))
    points = np.ascontiguousarray(rng.normal(0.0, 3.0, (args.grid * args.grid, args.m)))

    pairs = args.n * (args.n - 1) // 2
    print(f"pairwise: {args.n} rows x {args.m} features -> {pairs} pairs")
    print(f"one-vs-many: {args.grid}x{args.grid} grid points")
    if _cy is None:
        print("compiled backend not built; timing numpy fallback only")
    print()
    header = f"{'kernel':<26}{'numpy':>12}{'cython':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for kind_code, kind in enumerate(KINDS):
        t_py = best_of(args.repeats, _py.pairwise, X, kind_code, D, E)
        row = f"{'pairwise ' + kind:<26}{t_py * 1e3:>10.1f}ms"
        if _cy is not None:
            t_cy = best_of(args.repeats, _cy.pairwise, X, kind_code, D, E)
            row += f"{t_cy * 1e3:>10.1f}ms{t_py / t_cy:>9.1f}x"
        print(row)

    for kind_code, kind in enumerate(KINDS):
        t_py = best_of(args.repeats, _py.one_to_many, reference, points, kind_code, D, E)
        row = f"{'one-vs-many ' + kind:<26}{t_py * 1e3:>10.1f}ms"
        if _cy is not None:
            t_cy = best_of(args.repeats, _cy.one_to_many, reference, points, kind_code, D, E)
            row += f"{t_cy * 1e3:>10.1f}ms{t_py / t_cy:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
