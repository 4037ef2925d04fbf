"""Compare the numba and numpy kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

The first numba call in a fresh environment includes JIT compilation (cached
on disk afterwards), so every case is run once as a warm-up before timing.
"""
import argparse
import time

import numpy as np

from hadamat import _kernels
from hadamat import constructions as C
from hadamat.matrix import butson_exponents

SEARCH_CASES = [(5, 5), (4, 8), (6, 6), (7, 7), (6, 12)]


def _time(fn, repeat):
    fn()
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def bench_search(repeat):
    print(f"{'search (n, N)':<16}{'numba s':>10}{'numpy s':>10}{'rows':>7}")
    for n, N in SEARCH_CASES:
        tj, rj = _time(lambda: _kernels.circulant_search(n, N, use_numba=True), repeat)
        tp, rp = _time(lambda: _kernels.circulant_search(n, N, use_numba=False), repeat)
        assert np.array_equal(rj, rp)
        print(f"{str((n, N)):<16}{tj:>10.4f}{tp:>10.4f}{len(rj):>7}")


def bench_equiv(repeat):
    f5 = butson_exponents(C.get("F_5"))
    perms = _kernels.permutation_array(5)
    print(f"{'equiv F_5 vs':<16}{'numba s':>10}{'numpy s':>10}{'hits':>7}")
    for name in ("D_1", "D_2", "D_3", "D_4"):
        e2 = butson_exponents(C.get(name))
        T = (e2 - e2[:, :1] - e2[:1, :] + e2[0, 0]) % 60
        tj, rj = _time(lambda: _kernels.equiv_scan(f5, T, perms, 60, True, use_numba=True), repeat)
        tp, rp = _time(lambda: _kernels.equiv_scan(f5, T, perms, 60, True, use_numba=False), repeat)
        assert rj == rp
        print(f"{name:<16}{tj:>10.4f}{tp:>10.4f}{rj[1]:>7}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        print("numba is not importable; only the numpy path is available")
        return
    bench_search(args.repeat)
    print()
    bench_equiv(args.repeat)


if __name__ == "__main__":
    main()
