"""Time the whole-cube kernels under both backends on identical inputs.

Run: python3 benchmarks/bench_kernels.py --n 18 --repeats 3
"""
import argparse
import time

import numpy as np

from hamming_kfree import kernels
from hamming_kfree._accel import HAVE_NUMBA
from hamming_kfree.bch import build_fiber_coloring
from hamming_kfree.cube import CubeParams, subset_masks
from hamming_kfree.field import next_prime


def cases(n):
    rng = np.random.default_rng(0)
    col = build_fiber_coloring(CubeParams(n, 4))
    masks = subset_masks(n, 4)
    verts = np.flatnonzero(col.colors == 0)
    basis = rng.integers(0, 1 << 40, n)
    span_basis = rng.integers(1, 1 << 30, min(n, 20))
    return {
        "linear_keys": lambda: kernels.linear_keys(basis),
        "esym_keys": lambda: kernels.esym_keys(n, 2, next_prime(n)),
        "count_monochromatic_edges": lambda: kernels.count_monochromatic_edges(col.colors, masks),
        "count_set_edges": lambda: kernels.count_set_edges(verts, n, masks),
        "span_min_weight": lambda: kernels.span_min_weight(span_basis),
    }


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=int, default=16)
    p.add_argument("--repeats", type=int, default=3)
    args = p.parse_args()

    names = ["numpy"] + (["numba"] if HAVE_NUMBA else [])
    print(f"n={args.n}  backends: {', '.join(names)}")
    print(f"{'kernel':<28}" + "".join(f"{b:>12}" for b in names) + f"{'speedup':>10}")
    for label, fn in cases(args.n).items():
        row = {}
        for b in names:
            with kernels.backend(b):
                fn()  # warm-up, includes JIT compile for numba
                row[b] = best_of(fn, args.repeats)
        speed = row["numpy"] / row["numba"] if "numba" in row else float("nan")
        print(f"{label:<28}" + "".join(f"{row[b] * 1e3:>10.2f}ms" for b in names) + f"{speed:>9.1f}x")


if __name__ == "__main__":
    main()
