"""Compare the compiled and pure-Python elimination kernels.

Usage: python benchmarks/bench_kernels.py [--trials N]

Times the three kernels on the matrix shapes the campaigns actually
produce (forms and systems from random genus-3 transvection words) and a
full campaign slice through each backend.
"""

import argparse
import random
import time
from fractions import Fraction

from splab import _kernels_py

try:
    from splab import _kernels_c
except ImportError:
    _kernels_c = None


def random_matrix(rng, rows, cols, bound=6):
    return [
        [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(cols)]
        for _ in range(rows)
    ]


def random_symmetric(rng, n, bound=6):
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            x = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            m[i][j] = m[j][i] = x
    return m


def bench(label, fn, inputs):
    start = time.perf_counter()
    for x in inputs:
        fn(x)
    elapsed = time.perf_counter() - start
    print(f"  {label:28s} {elapsed * 1000:8.1f} ms")
    return elapsed


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=300)
    args = ap.parse_args()

    rng = random.Random(12345)
    rect = [random_matrix(rng, 6, 13) for _ in range(args.trials)]
    square = [random_matrix(rng, 6, 6) for _ in range(args.trials)]
    sym = [random_symmetric(rng, 6) for _ in range(args.trials)]

    backends = [("pure-python", _kernels_py)]
    if _kernels_c is not None:
        backends.append(("compiled", _kernels_c))
    else:
        print("compiled backend not built; showing pure-python only")

    totals = {}
    for name, mod in backends:
        print(f"{name}:")
        t = bench("rref 6x13", mod.rref, rect)
        t += bench("det 6x6", mod.det, square)
        t += bench("symmetric_diagonal 6x6", mod.symmetric_diagonal, sym)
        totals[name] = t

    if len(totals) == 2:
        ratio = totals["pure-python"] / totals["compiled"]
        print(f"speedup (pure-python / compiled): {ratio:.2f}x")

    # end-to-end slice: same campaign through whichever backend is loaded
    from splab.kernels import BACKEND
    from splab.lab import SampleParams, run_campaign

    report = run_campaign("main_theorem", SampleParams(g=3, seed=1), 50)
    print(f"campaign slice ({BACKEND} backend): 50 genus-3 trials in "
          f"{report.elapsed_ms} ms, {len(report.failures)} failures")
    print("rerun with SPLAB_PURE_PYTHON=1 to time the slice on the fallback")


if __name__ == "__main__":
    main()
