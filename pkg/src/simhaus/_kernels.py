"""Integer kernels for the class-distance matrix inner loop.

The hot loop minimizes, over all vertex relabelings of one complex, the
maximum of precomputed face-to-complex distance codes. Distances enter
as small integer codes (indices into a sorted table of exact rationals),
so the kernels only ever compare and select integers; exactness is
preserved because the code order mirrors the value order.

Two interchangeable implementations:

  * a numba ``@njit`` loop with early exit (default when numba imports);
  * a pure-numpy vectorized fallback.

Set the environment variable ``SIMHAUS_NO_NUMBA=1`` to force the numpy
path. ``benchmarks/bench_kernels.py`` compares the two.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


def numba_disabled() -> bool:
    return os.environ.get("SIMHAUS_NO_NUMBA", "").strip() not in ("", "0")


def backend_name() -> str:
    return "numba" if (HAVE_NUMBA and not numba_disabled()) else "numpy"


@njit(cache=True)
def _pairs_numba(tables, maxfaces, lens, fwd, inv, out):  # pragma: no cover - jitted
    count = tables.shape[0]
    nperm = fwd.shape[0]
    big = np.int64(1 << 30)
    for a in range(count):
        for b in range(a + 1, count):
            best = big
            for p in range(nperm):
                cur = np.int64(0)
                for fi in range(lens[a]):
                    v = np.int64(tables[b, fwd[p, maxfaces[a, fi]]])
                    if v > cur:
                        cur = v
                    if cur >= best:
                        break
                if cur < best:
                    for gi in range(lens[b]):
                        v = np.int64(tables[a, inv[p, maxfaces[b, gi]]])
                        if v > cur:
                            cur = v
                        if cur >= best:
                            break
                if cur < best:
                    best = cur
            out[a, b] = best
            out[b, a] = best


def _pairs_numpy(tables, maxfaces, lens, fwd, inv, out):
    count = tables.shape[0]
    for a in range(count):
        fa = maxfaces[a, : lens[a]]
        permuted_a = fwd[:, fa]  # (nperm, |max faces of a|)
        for b in range(a + 1, count):
            fb = maxfaces[b, : lens[b]]
            d_ab = tables[b][permuted_a].max(axis=1)
            d_ba = tables[a][inv[:, fb]].max(axis=1)
            best = int(np.maximum(d_ab, d_ba).min())
            out[a, b] = best
            out[b, a] = best


def pairwise_min_codes(tables: np.ndarray, maxfaces: np.ndarray, lens: np.ndarray,
                       fwd: np.ndarray, inv: np.ndarray,
                       backend: str | None = None) -> np.ndarray:
    """All-pairs min-over-relabelings of the max face-distance code.

    Args:
        tables: (C, 2**n) int16, per-class distance code of every vertex
            subset encoded as a bitmask (entry 0 unused).
        maxfaces: (C, M) int32 bitmasks of maximal faces, zero padded.
        lens: (C,) number of valid entries per maxfaces row.
        fwd / inv: (P, 2**n) int32 bitmask images under each relabeling
            and its inverse.
        backend: "numba", "numpy" or None for the environment default.

    Returns:
        (C, C) int64 symmetric matrix of codes; the diagonal is zero.
    """
    count = tables.shape[0]
    out = np.zeros((count, count), dtype=np.int64)
    if backend is None:
        backend = backend_name()
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not installed")
        _pairs_numba(tables, maxfaces, lens, fwd, inv, out)
    elif backend == "numpy":
        _pairs_numpy(tables, maxfaces, lens, fwd, inv, out)
    else:
        raise ValueError(f"unknown kernel backend {backend!r}")
    return out
