"""Time the numba kernels against their numpy twins.

    python benchmarks/bench_kernels.py [--repeat 5]

The first numba call per signature includes compilation and is reported
separately from the steady-state best-of-``repeat`` timing.
"""
import argparse
import time

import numpy as np

from wtilde.kernels import get_backend
from wtilde.majorana import _point_matrix, phi_set


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases(rng):
    psi = rng.standard_normal(1 << 16) + 1j * rng.standard_normal(1 << 16)
    m = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    bits = rng.integers(0, 2, size=(100_000, 10))
    yield "permutation_sum n=7", lambda k: k.permutation_sum(_point_matrix(phi_set(7)))
    yield "permutation_sum n=8", lambda k: k.permutation_sum(_point_matrix(phi_set(8)))
    yield "permanent n=14", lambda k: k.permanent(rng.standard_normal((14, 14)) + 0j)
    yield "apply_local_power n=16", lambda k: k.apply_local_power(m, psi, 16)
    yield "apply_local_power n=5 (ILO objective)", lambda k: k.apply_local_power(m, psi[:32], 5)
    yield "election_tally 1e5 x 10", lambda k: k.election_tally(bits)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    numpy_k = get_backend("numpy")
    numba_k = get_backend("numba")
    rng = np.random.default_rng(0)
    print(f"{'kernel':40s} {'numpy':>12s} {'numba':>12s} {'first call':>12s} {'speedup':>8s}")
    for name, call in cases(rng):
        t0 = time.perf_counter()
        call(numba_k)
        first = time.perf_counter() - t0
        t_np = _best(lambda: call(numpy_k), args.repeat)
        t_nb = _best(lambda: call(numba_k), args.repeat)
        print(f"{name:40s} {t_np * 1e3:10.3f}ms {t_nb * 1e3:10.3f}ms {first * 1e3:10.1f}ms {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
