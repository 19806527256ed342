#!/usr/bin/env python3
"""Timing comparison of the pure-python kernels against the compiled core.

Each workload is run on both backends, outputs are checked for equality,
and the best-of-repeat wall times are printed side by side. Run from the
repository root:

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from discarr import _purecore

try:
    from discarr import _fastcore
except ImportError:
    _fastcore = None


def cube_adjacency(n):
    return [[u ^ (1 << b) for b in range(n)] for u in range(1 << n)]


def to_csr(adj):
    v = len(adj)
    indptr = np.zeros(v + 1, dtype=np.uint32)
    for i, nbrs in enumerate(adj):
        indptr[i + 1] = indptr[i] + len(nbrs)
    indices = np.array([u for nbrs in adj for u in nbrs], dtype=np.uint32)
    return indptr, indices, v


def best_of(repeat, fn, *args):
    best, out = None, None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def normalize(result):
    if isinstance(result, tuple):
        return tuple(
            x.tolist() if isinstance(x, np.ndarray) else x for x in result
        )
    if isinstance(result, np.ndarray):
        return result.tolist()
    return result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="repetitions, best time wins")
    args = parser.parse_args()

    adj10 = cube_adjacency(10)
    adj8 = cube_adjacency(8)
    dist8_pure = _purecore.all_pairs_bfs(adj8)
    labels10 = list(range(1 << 10))

    workloads = [
        (
            "all_pairs_bfs Q10 (1024 vertices)",
            lambda: _purecore.all_pairs_bfs(adj10),
            (lambda: _fastcore.all_pairs_bfs_csr(*to_csr(adj10))) if _fastcore else None,
        ),
        (
            "hamming_audit Q10 (523776 pairs)",
            lambda: _purecore.hamming_audit(labels10, _purecore.all_pairs_bfs(adj10), 10),
            (
                lambda: _fastcore.hamming_audit(
                    np.array(labels10, dtype=np.uint64),
                    _fastcore.all_pairs_bfs_csr(*to_csr(adj10)),
                    10,
                )
            )
            if _fastcore
            else None,
        ),
        (
            "median_defects Q8 (2.7M triples)",
            lambda: _purecore.median_defects(dist8_pure, 10),
            (
                lambda: _fastcore.median_defects(
                    _fastcore.all_pairs_bfs_csr(*to_csr(adj8)), 10
                )
            )
            if _fastcore
            else None,
        ),
        (
            "sample_overlaps N=10^4 r=100 trials=2*10^4",
            lambda: _purecore.sample_overlaps(10**4, 100, 2 * 10**4, 42),
            (lambda: _fastcore.sample_overlaps(10**4, 100, 2 * 10**4, 42)) if _fastcore else None,
        ),
    ]

    name_w = max(len(w[0]) for w in workloads)
    header = f"{'workload':<{name_w}}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}  match"
    print(header)
    print("-" * len(header))
    for name, pure_fn, fast_fn in workloads:
        t_pure, out_pure = best_of(args.repeat, pure_fn)
        if fast_fn is None:
            print(f"{name:<{name_w}}  {t_pure:>9.4f}s  {'n/a':>10}  {'n/a':>8}  n/a")
            continue
        t_fast, out_fast = best_of(args.repeat, fast_fn)
        match = normalize(out_pure) == normalize(out_fast)
        print(
            f"{name:<{name_w}}  {t_pure:>9.4f}s  {t_fast:>9.4f}s  "
            f"{t_pure / t_fast:>7.1f}x  {'yes' if match else 'NO'}"
        )
        if not match:
            raise SystemExit(f"backend outputs diverge on: {name}")
    if _fastcore is None:
        print("\ncompiled core not available; build it with: pip install -e . --no-build-isolation")


if __name__ == "__main__":
    main()
