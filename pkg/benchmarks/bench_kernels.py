"""Compare the numba and numpy cascade kernels.

Tables are built once up front, so the timings cover only the per-step kernel.
Usage: python3 benchmarks/bench_kernels.py [--d 3 4] [--n 20 50 100] [--repeats 5]
"""

import argparse
import statistics
import time

import numpy as np

from schurpress import _kernels
from schurpress.compressor import compress
from schurpress.oracle import random_qudit


def best_of(fn, repeats):
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--d", type=int, nargs="+", default=[2, 3, 4])
    parser.add_argument("--n", type=int, nargs="+", default=[20, 50, 100])
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    _kernels.warm_up()
    backends = sorted(_kernels.BACKENDS)
    rng = np.random.default_rng(0)
    print(f"{'d':>3} {'n':>5} {'dim':>8} " + " ".join(f"{b + ' [ms]':>12}" for b in backends) + "  max|diff|")
    for d in args.d:
        for n in args.n:
            phi = random_qudit(d, rng)
            ref = compress(phi, n, backend="numpy")  # also warms the tables
            times = [best_of(lambda b=b: compress(phi, n, backend=b), args.repeats) for b in backends]
            diff = max(np.abs(compress(phi, n, backend=b).amplitudes - ref.amplitudes).max() for b in backends)
            print(f"{d:>3} {n:>5} {len(ref.amplitudes):>8} "
                  + " ".join(f"{1e3 * t:>12.3f}" for t in times) + f"  {diff:.1e}")


if __name__ == "__main__":
    main()
