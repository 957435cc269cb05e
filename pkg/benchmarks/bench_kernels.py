"""Timing comparison between the numba kernels and the numpy fallback.

Run as a script:

    python3 benchmarks/bench_kernels.py [--repeat 3]

The first numba call includes jit compilation, so each kernel is warmed up
once before timing.  REGRAPH_NO_NUMBA only affects which backend the package
itself uses; here both backend modules are imported and timed directly.
"""

import argparse
import time

import numpy as np

from regraph.core import Multigraph
from regraph.kernels import _jit, _numpy
from regraph.sampling import child_rng, random_multigraph


def sweep_inputs():
    out = []
    for i, n in enumerate((12, 14, 16, 18)):
        g = random_multigraph(n, child_rng(1729, i), density=0.45)
        out.append((f"odd-cut sweep n={n}", g.weight_matrix().astype(np.int64)))
    return out


def pm_inputs():
    out = []
    for n in (10, 12, 14):
        g = Multigraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
        eu = np.array([u for u, _ in g.edges], dtype=np.int64)
        ev = np.array([v for _, v in g.edges], dtype=np.int64)
        avail = np.ones(g.m, dtype=np.bool_)
        out.append((f"pm enumeration K{n}", (n, eu, ev, avail)))
    return out


def timeit(fn, args, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rows = []
    for label, w in sweep_inputs():
        _jit.min_odd_cut_sweep(w)  # warm up compilation
        t_jit = timeit(_jit.min_odd_cut_sweep, (w,), args.repeat)
        t_np = timeit(_numpy.min_odd_cut_sweep, (w,), args.repeat)
        rows.append((label, t_jit, t_np))

    for label, inp in pm_inputs():
        _jit.enumerate_pms(*inp)
        t_jit = timeit(_jit.enumerate_pms, inp, args.repeat)
        t_np = timeit(_numpy.enumerate_pms, inp, args.repeat)
        rows.append((label, t_jit, t_np))

    print(f"{'case':28s} {'numba':>10s} {'numpy':>10s} {'ratio':>7s}")
    for label, t_jit, t_np in rows:
        ratio = t_np / t_jit if t_jit > 0 else float("inf")
        print(f"{label:28s} {t_jit * 1e3:8.2f}ms {t_np * 1e3:8.2f}ms {ratio:6.1f}x")


if __name__ == "__main__":
    main()
