"""Time the numba kernels against the pure-numpy fallbacks.

    python benchmarks/bench_kernels.py [--groups S6 A7 S7] [--repeat 5]

Each kernel is called once per backend to warm up (numba compiles on first
call), outputs are compared for equality, then the best of ``--repeat``
runs is reported.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from ginv import _accel
from ginv.catalog import build


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--groups", nargs="+", default=["S6", "A7", "S7"])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if not _accel.HAVE_NUMBA:
        print("numba is not installed; only the numpy backend is available")
        return
    numpy_k, numba_k = _accel.KERNELS["numpy"], _accel.KERNELS["numba"]
    print(f"{'group':<6} {'kernel':<11} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for spec in args.groups:
        G = build(spec, table_cap=6000)
        T = G.table
        img = G.gen_indices
        cases = {
            "orbit_tree": (G.conj_actions,),
            "mult_table": (G.levels, G.parent, G.gen_of, G.lmul),
            "extend_hom": (G.levels, G.parent, G.gen_of, T, img, G.rmul),
        }
        for name, call_args in cases.items():
            a, b = numpy_k[name](*call_args), numba_k[name](*call_args)
            for x, y in zip(a if isinstance(a, tuple) else (a,), b if isinstance(b, tuple) else (b,)):
                assert np.array_equal(x, y), f"{name} backends disagree on {spec}"
            t_np = best_of(lambda: numpy_k[name](*call_args), args.repeat)
            t_nb = best_of(lambda: numba_k[name](*call_args), args.repeat)
            print(f"{spec:<6} {name:<11} {1e3 * t_np:>10.2f} {1e3 * t_nb:>10.2f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
