"""Pure-Python twins of the compiled kernels in _fastcore.

Same contracts, same loop orders, same random streams; slower than the C
versions, useful for comparison and as a fallback when the extension is
not built.  Counterexample lists must match the compiled backend entry
for entry, so every scan here walks indices in the identical order.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from .rng import SplitMix64


def all_pairs_bfs(neighbors) -> np.ndarray:
    """BFS from every vertex; dist[i, j] = -1 when j is unreachable from i."""
    v = len(neighbors)
    out = np.full((v, v), -1, dtype=np.int16)
    for s in range(v):
        drow = [-1] * v
        drow[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            nd = drow[x] + 1
            for y in neighbors[x]:
                if drow[y] < 0:
                    drow[y] = nd
                    q.append(y)
        out[s] = drow
    return out


def hamming_audit(labels, dist, max_examples: int = 10):
    """Compare graph distance against Hamming distance of vertex labels.

    Returns (pairs checked, violation count, first violations as
    (i, j, graph distance, hamming distance) tuples).
    """
    v = len(labels)
    checked = 0
    violations = 0
    examples = []
    for i in range(v):
        li = labels[i]
        di = dist[i]
        for j in range(i + 1, v):
            checked += 1
            d = int(di[j])
            h = (li ^ labels[j]).bit_count()
            if d != h:
                violations += 1
                if len(examples) < max_examples:
                    examples.append((i, j, d, h))
    return checked, violations, examples


def median_defects(dist, max_examples: int = 10):
    """Count vertex triples without a unique common-geodesic vertex.

    Precomputes the geodesic interval of every vertex pair as a bitset
    (bit x set iff d(u,x) + d(x,w) = d(u,w)), then checks that the three
    pairwise intervals of each triple meet in exactly one vertex.
    Returns (triples checked, defect count, first defects as
    (u, v, w, meet size) tuples).  Assumes a connected graph.
    """
    v = int(dist.shape[0])
    intervals = [0] * (v * (v - 1) // 2)
    pos = 0
    for u in range(v):
        du = dist[u]
        for w in range(u + 1, v):
            on = (du + dist[w]) == du[w]
            intervals[pos] = int.from_bytes(
                np.packbits(on, bitorder="little").tobytes(), "little"
            )
            pos += 1
    checked = 0
    defects = 0
    examples = []
    # triangular index of (a, b) with a < b is base(a) + b
    for u in range(v - 2):
        base_u = u * v - (u * (u + 1)) // 2 - u - 1
        for w in range(u + 1, v - 1):
            iuw = intervals[base_u + w]
            base_w = w * v - (w * (w + 1)) // 2 - w - 1
            for x in range(w + 1, v):
                m = iuw & intervals[base_u + x] & intervals[base_w + x]
                checked += 1
                c = m.bit_count()
                if c != 1:
                    defects += 1
                    if len(examples) < max_examples:
                        examples.append((u, w, x, c))
    return checked, defects, examples


def _draw_subset(rng: SplitMix64, n: int, r: int) -> list:
    # partial Fisher-Yates: position j of the virtual identity array is
    # final after step j, so only touched slots are kept (in a dict)
    perm = {}
    picked = []
    for j in range(r):
        u = j + rng.randbelow(n - j)
        picked.append(perm.get(u, u))
        perm[u] = perm.get(j, j)
    return picked


def sample_overlaps(n: int, r: int, trials: int, seed: int):
    """Per trial: draw two uniform r-subsets of range(n), record overlap
    size T and symmetric-difference size D.  Trial t uses the substream
    seed XOR t; within a trial the F draw precedes the G draw on one
    stream.  Returns (T, D) as int64 arrays.
    """
    ts = np.empty(trials, dtype=np.int64)
    ds = np.empty(trials, dtype=np.int64)
    for t in range(trials):
        rng = SplitMix64(seed ^ t)
        f = set(_draw_subset(rng, n, r))
        g = set(_draw_subset(rng, n, r))
        ts[t] = len(f & g)
        ds[t] = len(f ^ g)
    return ts, ds
