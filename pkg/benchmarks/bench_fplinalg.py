"""Benchmark the compiled F_p kernels against the numpy fallback.

Run:  python benchmarks/bench_fplinalg.py [--sizes 64,128,256] [--p 3] [--repeat 5]

Both backends are imported directly (no env juggling) and checked for
agreement on every case before timing.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from symdec.fplinalg import _kernels_py

try:
    from symdec.fplinalg import _kernels
except ImportError:
    _kernels = None


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_case(n: int, p: int, repeat: int, rng) -> list[str]:
    a = rng.integers(0, p, (n, n), dtype=np.int64)
    b = rng.integers(0, p, (n, n), dtype=np.int64)
    rows = []

    impls = [("py", _kernels_py)] + ([("c", _kernels)] if _kernels else [])
    results = {}
    for name, impl in impls:
        work = np.ascontiguousarray(a.copy())
        pivots = impl.rref_inplace(work, p)
        results[name] = (work.copy(), list(pivots))
        t_rref = _time(
            lambda impl=impl: impl.rref_inplace(np.ascontiguousarray(a.copy()), p),
            repeat,
        )
        t_mm = _time(lambda impl=impl: impl.matmul(a, b, p), repeat)
        rows.append(f"{n:>5}  {name:>3}  rref {t_rref * 1e3:9.2f} ms   matmul {t_mm * 1e3:9.2f} ms")
    if len(results) == 2:
        ref, other = results["py"], results["c"]
        assert np.array_equal(ref[0], other[0]) and ref[1] == other[1], "backends disagree"
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="64,128,256,512")
    parser.add_argument("--p", type=int, default=3)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _kernels is None:
        print("compiled kernels not built; timing the numpy fallback only")
    rng = np.random.default_rng(2024)
    print(" size  impl")
    for n in (int(s) for s in args.sizes.split(",")):
        for line in bench_case(n, args.p, args.repeat, rng):
            print(line)


if __name__ == "__main__":
    main()
