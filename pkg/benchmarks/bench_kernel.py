"""Benchmark the compiled mod-p kernel against the pure-Python fallback.

    python3 benchmarks/bench_kernel.py [--sizes 200,400,800] [--p 101]

Times rref, nullspace, and matmul on random matrices, plus one
end-to-end table build with each backend.
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np


def bench_backend(module, sizes, p, reps=3):
    rows = []
    for n in sizes:
        rng = np.random.default_rng(12345)
        a = rng.integers(0, p, size=(n, n), dtype=np.int64)
        b = rng.integers(0, p, size=(n, n), dtype=np.int64)
        best_rref = min(_timeit(lambda: module.rref(a, p)) for _ in range(reps))
        best_mm = min(_timeit(lambda: module.matmul(a, b, p)) for _ in range(reps))
        rows.append((n, best_rref, best_mm))
    return rows


def _timeit(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def bench_build():
    from surfalg.algebra import build_algebra
    from surfalg.catalog import builtin
    from surfalg.fields import GF

    start = time.perf_counter()
    for name, params in [("psi_r", {"r": 3}), ("s_r", {"r": 3}), ("disc2", {})]:
        table = build_algebra(builtin(name, GF(101), **params))
        table.structure_constants()
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="200,400,800")
    parser.add_argument("--p", type=int, default=101)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    from surfalg import kernel
    from surfalg import _kernel_py

    backends = [("py", _kernel_py)]
    if kernel.BACKEND == "c":
        from surfalg import _kernel

        backends.insert(0, ("c", _kernel))
    else:
        print("compiled kernel not available; timing the fallback only")

    print(f"p = {args.p}")
    print(f"{'backend':>8} {'n':>6} {'rref (s)':>10} {'matmul (s)':>11}")
    results = {}
    for name, module in backends:
        for n, t_rref, t_mm in bench_backend(module, sizes, args.p):
            print(f"{name:>8} {n:>6} {t_rref:>10.4f} {t_mm:>11.4f}")
            results[(name, n)] = (t_rref, t_mm)
    if len(backends) == 2:
        print("\nspeedup of the compiled kernel:")
        for n in sizes:
            c_rref, c_mm = results[("c", n)]
            p_rref, p_mm = results[("py", n)]
            print(f"  n={n}: rref x{p_rref / c_rref:.1f}, matmul x{p_mm / c_mm:.1f}")

    print(f"\ntable builds ({kernel.BACKEND} backend): {bench_build():.2f}s")
    if kernel.BACKEND == "c" and not os.environ.get("SURFALG_BENCH_CHILD"):
        env = dict(os.environ, SURFALG_PURE="1", SURFALG_BENCH_CHILD="1")
        out = subprocess.run(
            [sys.executable, "-c",
             "from benchmarks.bench_kernel import bench_build;"
             "print(f'table builds (py backend): {bench_build():.2f}s')"],
            env=env, capture_output=True, text=True, cwd=os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
        )
        print(out.stdout.strip() or out.stderr.strip())


if __name__ == "__main__":
    main()
