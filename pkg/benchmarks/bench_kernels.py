"""Time the numba kernels against the pure-numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each kernel is run once per backend to warm up (JIT compilation for numba),
then timed as the best of ``--repeat`` runs. Outputs from the two backends are
compared element-wise before any timing is reported.
"""

import argparse
import time

import numpy as np

from zasym import _kernels as K
from zasym.partitions import Partition
from zasym.tabloids import bounds


def _content_bounds(parts, n):
    lo, hi = bounds(Partition(parts), "content", n)
    return np.array(lo), np.array(hi)


def cases():
    lo, hi = _content_bounds((4, 3, 2, 1), 5)
    total = int(np.prod(hi - lo + 1))
    block = K.odometer_block(lo, hi, 0, total, "numpy")
    return [
        ("norm_histogram (4,3,2,1) n=5", lambda b: K.norm_histogram(lo, hi, b)),
        ("odometer_block (4,3,2,1) n=5", lambda b: K.odometer_block(lo, hi, 0, total, b)),
        ("odometer_rank  (4,3,2,1) n=5", lambda b: K.odometer_rank(block, lo, hi, b)),
        ("ssyt_fillings  (4,3,2,1) n=6", lambda b: K.ssyt_fillings((4, 3, 2, 1), 6, b)),
        ("ssyt_histogram (5,4,3,1) n=7", lambda b: K.ssyt_norm_histogram((5, 4, 3, 1), 7, b)),
    ]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not K.HAVE_NUMBA:
        raise SystemExit("numba is not installed; install the 'fast' extra to compare backends")
    print(f"{'kernel':32} {'numba (s)':>10} {'numpy (s)':>10} {'speedup':>8}")
    for name, fn in cases():
        a, b = fn("numba"), fn("numpy")
        if a.shape != b.shape or not (a == b).all():
            raise SystemExit(f"backends disagree on {name}")
        t_nb = best_of(lambda: fn("numba"), args.repeat)
        t_np = best_of(lambda: fn("numpy"), args.repeat)
        print(f"{name:32} {t_nb:10.4f} {t_np:10.4f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
