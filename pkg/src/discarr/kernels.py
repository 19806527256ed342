"""Backend selection and uniform wrappers for the hot kernels.

The compiled extension (_fastcore) is preferred; _purecore is the
drop-in fallback.  Set the environment variable DISCARR_PURE=1 to force
the pure backend, e.g. for the parity checks in the benchmark script.
Both backends return identical values, including counterexample lists
and sampled random streams.
"""

from __future__ import annotations

import os

import numpy as np

from .rng import MASK64

if os.environ.get("DISCARR_PURE", "") not in ("", "0"):
    from . import _purecore as _impl

    BACKEND = "pure"
else:
    try:
        from . import _fastcore as _impl

        BACKEND = "compiled"
    except ImportError:
        from . import _purecore as _impl

        BACKEND = "pure"

#: Largest vertex count accepted by the median triple scan.  The scan is
#: O(V^3) with a bitset intersection per triple; the compiled backend
#: holds the budget up to hypercube size 2^10, the pure one does not.
MEDIAN_VERTEX_CAP = 1100 if BACKEND == "compiled" else 300

MAX_EXAMPLES = 10


def all_pairs_bfs(neighbors) -> np.ndarray:
    """Distance matrix (int16, -1 for unreachable) of an adjacency list."""
    if BACKEND == "compiled":
        v = len(neighbors)
        indptr = np.zeros(v + 1, dtype=np.uint32)
        for i, ns in enumerate(neighbors):
            indptr[i + 1] = indptr[i] + len(ns)
        indices = np.empty(int(indptr[v]), dtype=np.uint32)
        pos = 0
        for ns in neighbors:
            indices[pos : pos + len(ns)] = ns
            pos += len(ns)
        return _impl.all_pairs_bfs_csr(indptr, indices, v)
    return _impl.all_pairs_bfs(neighbors)


def hamming_audit(labels, dist: np.ndarray, max_examples: int = MAX_EXAMPLES):
    """Check graph distance == Hamming distance of labels over all pairs.

    Labels must fit in 64 bits.  Returns (checked, violations, examples),
    each example (i, j, graph distance, hamming distance).
    """
    if any(label >> 64 for label in labels):
        raise ValueError("labels wider than 64 bits")
    if BACKEND == "compiled":
        arr = np.array(labels, dtype=np.uint64)
        return _impl.hamming_audit(arr, dist, max_examples)
    return _impl.hamming_audit(list(labels), dist, max_examples)


def median_defects(dist: np.ndarray, max_examples: int = MAX_EXAMPLES):
    """Count triples without a unique median vertex (connected graphs only).

    Returns (checked, defects, examples), each example (u, v, w, count of
    vertices on all three pairwise geodesic intervals).
    """
    v = int(dist.shape[0])
    if v > MEDIAN_VERTEX_CAP:
        from .errors import ScaleGuardError

        raise ScaleGuardError(
            f"median triple scan on {v} vertices exceeds the "
            f"{MEDIAN_VERTEX_CAP} cap of the {BACKEND} backend"
        )
    return _impl.median_defects(dist, max_examples)


def sample_overlaps(n: int, r: int, trials: int, seed: int):
    """Overlap and symmetric-difference sizes of paired random r-subsets.

    Returns (T, D) as int64 arrays of length trials; deterministic in
    (n, r, trials, seed) and identical across backends.
    """
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    return _impl.sample_overlaps(n, r, trials, seed & MASK64)
