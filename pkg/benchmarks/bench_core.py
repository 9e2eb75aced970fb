#!/usr/bin/env python3
"""Benchmark the compiled row-operation core against the pure Python one.

Times the three kernel primitives on synthetic matrices and one
representative end-to-end computation (the stable invariant chain of the
full linear group at p = 7), running each under both backends by swapping
the functions bound in modinv._kernels.

Usage: python benchmarks/bench_core.py [--repeat N] [--skip-end-to-end]
"""

import argparse
import random
import time
from contextlib import contextmanager

from modinv import _core_py, _kernels

try:
    from modinv import _core_c
except ImportError:
    _core_c = None


@contextmanager
def backend(module):
    saved = (_kernels.rref, _kernels.reduce_row, _kernels.convolve)
    _kernels.rref = module.rref
    _kernels.reduce_row = module.reduce_row
    _kernels.convolve = module.convolve
    try:
        yield
    finally:
        _kernels.rref, _kernels.reduce_row, _kernels.convolve = saved


def _clear_engine_caches():
    from modinv import demazure, poly2

    poly2.act_matrix.cache_clear()
    demazure._delta_slice_rows.cache_clear()


def bench_micro(module, repeat):
    rng = random.Random(42)
    p = 7
    mats = [
        [[rng.randrange(p) for _ in range(90)] for _ in range(300)] for _ in range(4)
    ]
    vecs = [[rng.randrange(p) for _ in range(90)] for _ in range(200)]
    polys = [[rng.randrange(p) for _ in range(60)] for _ in range(100)]

    t0 = time.perf_counter()
    basis = pivots = None
    for _ in range(repeat):
        for m in mats:
            basis, pivots = module.rref(m, p)
    t_rref = (time.perf_counter() - t0) / repeat

    t0 = time.perf_counter()
    for _ in range(repeat):
        for v in vecs:
            module.reduce_row(v, basis, pivots, p)
    t_reduce = (time.perf_counter() - t0) / repeat

    t0 = time.perf_counter()
    for _ in range(repeat):
        for i in range(0, len(polys) - 1, 2):
            module.convolve(polys[i], polys[i + 1], p)
    t_conv = (time.perf_counter() - t0) / repeat

    return {"rref 300x90 (x4)": t_rref, "reduce_row x200": t_reduce, "convolve 60x60 x50": t_conv}


def bench_end_to_end(module):
    from modinv.grp2 import catalog_group
    from modinv.stable_chain import stable_chain

    _clear_engine_caches()
    with backend(module):
        t0 = time.perf_counter()
        res = stable_chain(catalog_group("L", 7, 6))
        elapsed = time.perf_counter() - t0
    assert res.stabilization_index == 1
    return elapsed


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args()

    modules = [("python", _core_py)] + ([("c", _core_c)] if _core_c else [])
    results = {}
    for name, module in modules:
        results[name] = bench_micro(module, args.repeat)
        if not args.skip_end_to_end:
            results[name]["stable chain GL_2(F_7)"] = bench_end_to_end(module)

    tasks = list(next(iter(results.values())))
    width = max(len(t) for t in tasks) + 2
    header = f"{'task':<{width}}" + "".join(f"{name:>12}" for name, _ in modules)
    if len(modules) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for task in tasks:
        row = f"{task:<{width}}"
        for name, _ in modules:
            row += f"{results[name][task] * 1000:>10.1f}ms"
        if len(modules) == 2:
            ratio = results["python"][task] / max(results["c"][task], 1e-9)
            row += f"{ratio:>9.1f}x"
        print(row)
    if _core_c is None:
        print("\ncompiled core not built; showing pure Python only")


if __name__ == "__main__":
    main()
