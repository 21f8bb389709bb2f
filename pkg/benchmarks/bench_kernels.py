#!/usr/bin/env python3
"""Benchmark the compiled kernel backend against the pure-Python fallback.

Times the hot kernels head to head (both backends are importable in one
process) and then the end-to-end evaluation sweep.

Usage:  python3 benchmarks/bench_kernels.py [--points N] [--quick]
"""

from __future__ import annotations

import argparse
import math
import time

from imbessel import GridSpec, ScalingMode
from imbessel import _kernels_py as kpy
from imbessel.driver import halton_grid
from imbessel.series import sigma0_over_a

try:
    from imbessel import _kernels_cy as kcy
except ImportError:
    kcy = None


def _time(fn, reps):
    t0 = time.perf_counter()
    for _ in range(reps):
        fn()
    return (time.perf_counter() - t0) / reps


def _bench_pair(name, make, reps):
    fp = make(kpy)
    tp = _time(fp, reps)
    if kcy is None:
        print(f"{name:<28} python {tp * 1e6:9.1f} us   (no compiled twin)")
        return
    fc = make(kcy)
    tc = _time(fc, reps)
    print(f"{name:<28} python {tp * 1e6:9.1f} us   cython "
          f"{tc * 1e6:9.1f} us   speedup {tp / tc:6.1f}x")


def bench_kernels(reps):
    w = sigma0_over_a(10.0) - math.log(2.0)
    mu = math.acosh(2.5)
    cases = [
        ("series_sums(a=10, x=4)",
         lambda k: lambda: k.series_sums(10.0, 4.0, w, 5e-17, 300)),
        ("cf2_kernel(a=5, x=8)",
         lambda k: lambda: k.cf2_kernel(-25.0, 8.0, 1e-15, 30000)),
        ("airy_quad_scaled(-6.5)",
         lambda k: lambda: k.airy_quad_scaled(-6.5)),
        ("airy_quad_scaled(6.5)",
         lambda k: lambda: k.airy_quad_scaled(6.5)),
        ("mon_quad(th=0.5, x=3)",
         lambda k: lambda: k.mon_quad(0.5, 3.0, 1e-12)),
        ("osc_quad full (a=10, x=4)",
         lambda k: lambda: k.osc_quad(math.acosh(2.5), 4.0, 10.0, 1e-12, 0)),
        ("osc_quad simpl (a=50, x=20)",
         lambda k: lambda: k.osc_quad(math.acosh(2.5), 20.0, 50.0, 1e-12, 1)),
    ]
    print("-- kernel microbenchmarks " + "-" * 46)
    for name, make in cases:
        _bench_pair(name, make, reps)


def bench_sweep(points):
    import os
    import subprocess
    import sys
    print(f"-- end-to-end: {points}-point scaled Wronskian sweep " + "-" * 24,
          flush=True)
    code = (
        "import time, sys\n"
        "from imbessel import selfcheck, GridSpec, backend_name\n"
        f"g = GridSpec(points={points})\n"
        "t0 = time.time()\n"
        "rep = selfcheck(g, tol=1e-10)\n"
        "dt = time.time() - t0\n"
        "print(f'{backend_name():>8}: {dt:7.2f} s   "
        "max|W-1| = {rep.max_wronskian:.2e}')\n")
    subprocess.run([sys.executable, "-c", code], check=True)
    subprocess.run([sys.executable, "-c", code], check=True,
                   env=dict(os.environ, IMBESSEL_PURE_PYTHON="1"))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=10000)
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    reps = 50 if args.quick else 300
    bench_kernels(reps)
    bench_sweep(1000 if args.quick else args.points)


if __name__ == "__main__":
    main()
