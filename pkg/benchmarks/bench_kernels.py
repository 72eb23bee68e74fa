#!/usr/bin/env python3
"""Benchmark the class-distance pair kernel: numba @njit vs pure numpy.

Builds the per-class face-distance code tables once (exact rational LP,
shared by both paths), then times only the min-over-relabelings pair
scan. Run:

    python benchmarks/bench_kernels.py [--n 4 5] [--repeat 5]
"""

import argparse
import time
from itertools import permutations

import numpy as np

from simhaus import enumerate_classes
from simhaus import iso_metric
from simhaus._kernels import HAVE_NUMBA, pairwise_min_codes


def build_inputs(n):
    classes = enumerate_classes(n)
    tables = [iso_metric._face_table((tuple(sorted(c.complex.maximal_faces)), n))
              for c in classes]
    distinct = sorted({v for t in tables for v in t})
    code_of = {v: i for i, v in enumerate(distinct)}
    code_arr = np.array([[code_of[v] for v in t] for t in tables], dtype=np.int16)

    maxlen = max(len(c.complex.maximal_faces) for c in classes)
    mask_rows = np.zeros((len(classes), maxlen), dtype=np.int32)
    lens = np.zeros(len(classes), dtype=np.int32)
    for i, c in enumerate(classes):
        masks = sorted(sum(1 << v for v in f) for f in c.complex.maximal_faces)
        lens[i] = len(masks)
        mask_rows[i, : len(masks)] = masks

    perms = list(permutations(range(n)))
    fwd = np.array([iso_metric._perm_mask_table(n, p) for p in perms], dtype=np.int32)
    inv_perms = [tuple(p.index(v) for v in range(n)) for p in perms]
    inv = np.array([iso_metric._perm_mask_table(n, p) for p in inv_perms], dtype=np.int32)
    return code_arr, mask_rows, lens, fwd, inv


def bench(backend, inputs, repeat):
    # warm once (JIT compile / cache effects)
    pairwise_min_codes(*inputs, backend=backend)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = pairwise_min_codes(*inputs, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[4, 5],
                        help="vertex counts to benchmark (default: 4 5)")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = ["numpy"] + (["numba"] if HAVE_NUMBA else [])
    if not HAVE_NUMBA:
        print("numba not installed; benchmarking the numpy path only")

    for n in args.n:
        t0 = time.perf_counter()
        inputs = build_inputs(n)
        setup = time.perf_counter() - t0
        classes = inputs[0].shape[0]
        pairs = classes * (classes - 1) // 2
        print(f"\nn={n}: {classes} classes, {pairs} pairs, "
              f"{inputs[3].shape[0]} relabelings each (table setup {setup:.2f}s)")
        results = {}
        for backend in backends:
            elapsed, out = bench(backend, inputs, args.repeat)
            results[backend] = (elapsed, out)
            rate = pairs / elapsed if elapsed else float("inf")
            print(f"  {backend:6s}: {elapsed * 1e3:8.2f} ms  ({rate:,.0f} pairs/s)")
        if len(results) == 2:
            same = bool((results["numba"][1] == results["numpy"][1]).all())
            speedup = results["numpy"][0] / results["numba"][0]
            print(f"  outputs identical: {same}; numba speedup: {speedup:.1f}x")


if __name__ == "__main__":
    main()
