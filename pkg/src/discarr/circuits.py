"""Circuit index combinatorics and the Johnson graph on circuits.

Circuits of a generic base arrangement with parameters (n, k) are exactly
the (k+1)-subsets of {0, ..., n-1}, held as bitmasks.  The canonical
order is colexicographic, which gives every circuit a dense rank in
[0, C(n, k+1)) via the combinatorial number system; two circuits are
Johnson-adjacent when they share k elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import ScaleGuardError

#: Enumeration guard: refuse to materialise more than this many circuits.
MAX_CIRCUITS = 10**6


def mask_from_elements(elems) -> int:
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def elements_of(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def colex_rank(mask: int) -> int:
    """Position of a subset in colex order over all same-size subsets.

    With elements e_1 < e_2 < ... < e_m the rank is sum of C(e_j, j).
    """
    r = 0
    for j, e in enumerate(elements_of(mask), start=1):
        r += comb(e, j)
    return r


def colex_unrank(rank: int, size: int) -> int:
    """Inverse of colex_rank for subsets of the given size.

    Greedy from the top: the largest element is the largest e with
    C(e, size) <= rank, then recurse on the remainder.
    """
    if rank < 0:
        raise ValueError("rank must be nonnegative")
    mask = 0
    for j in range(size, 0, -1):
        e = j - 1
        while comb(e + 1, j) <= rank:
            e += 1
        rank -= comb(e, j)
        mask |= 1 << e
    return mask


def all_circuits(n: int, k: int) -> list[int]:
    """All (k+1)-subset masks of {0, ..., n-1} in colex order."""
    total = comb(n, k + 1)
    if total > MAX_CIRCUITS:
        raise ScaleGuardError(
            f"C({n},{k + 1}) = {total} circuits exceeds the {MAX_CIRCUITS} guard"
        )
    return [colex_unrank(r, k + 1) for r in range(total)]


def johnson_adjacent(a: int, b: int) -> bool:
    """Adjacent in the Johnson graph: equal size, intersection one smaller."""
    size = a.bit_count()
    if b.bit_count() != size:
        raise ValueError("subsets of different sizes")
    return (a & b).bit_count() == size - 1


def johnson_distance(a: int, b: int) -> int:
    size = a.bit_count()
    if b.bit_count() != size:
        raise ValueError("subsets of different sizes")
    return size - (a & b).bit_count()


def johnson_neighbors(n: int, mask: int) -> list[int]:
    """Neighbors in colex order: swap one member for one non-member."""
    out = []
    ins = elements_of(mask)
    outs = [i for i in range(n) if not mask >> i & 1]
    for x in ins:
        for y in outs:
            out.append(mask ^ (1 << x) | 1 << y)
    out.sort(key=colex_rank)
    return out


def hypersimplex_vertex(n: int, mask: int) -> tuple[int, ...]:
    """0/1 indicator vector of the subset; all coordinate sums equal its size."""
    return tuple(mask >> i & 1 for i in range(n))


#: BFS cross-checks build a V x V distance matrix; keep V at desk scale.
MAX_BFS_VERTICES = 5000


@dataclass(frozen=True)
class JohnsonStats:
    """Audit record for the Johnson graph J(n, k+1) on circuit masks.

    The transitivity witness is one explicit relabelling of {0, ..., n-1}
    carrying the colex-first vertex to the colex-last one; relabelling
    preserves intersection sizes, hence adjacency.
    """

    n: int
    k: int
    vertices: int
    degree: int
    diameter: int
    is_regular: bool
    is_connected: bool
    distance_is_metric: bool
    witness_from: int
    witness_to: int
    witness_permutation: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "vertices": self.vertices,
            "degree": self.degree,
            "diameter": self.diameter,
            "is_regular": self.is_regular,
            "is_connected": self.is_connected,
            "distance_is_metric": self.distance_is_metric,
            "is_vertex_transitive_witness": {
                "from": circuit_label(self.n, self.witness_from),
                "to": circuit_label(self.n, self.witness_to),
                "permutation": [p + 1 for p in self.witness_permutation],
            },
        }


def relabel_mask(mask: int, perm) -> int:
    """Apply the point relabelling i -> perm[i] to a subset mask."""
    return mask_from_elements(perm[e] for e in elements_of(mask))


def _transitivity_witness(n: int, a: int, b: int) -> tuple[int, ...]:
    """A permutation of {0, ..., n-1} mapping subset a onto subset b."""
    perm = [0] * n
    for x, y in zip(elements_of(a), elements_of(b)):
        perm[x] = y
    rest_a = [i for i in range(n) if not a >> i & 1]
    rest_b = [i for i in range(n) if not b >> i & 1]
    for x, y in zip(rest_a, rest_b):
        perm[x] = y
    return tuple(perm)


def johnson_stats(n: int, k: int) -> JohnsonStats:
    """Compute Johnson graph statistics two ways and cross-check.

    Degree and diameter come from closed forms, then are re-derived by
    explicit neighbor counting and BFS over the whole graph.  The set
    distance (size minus intersection) is checked against BFS distance on
    every pair, which also certifies the triangle inequality.
    """
    circuits = all_circuits(n, k)
    v = len(circuits)
    if v > MAX_BFS_VERTICES:
        raise ScaleGuardError(
            f"J({n},{k + 1}) has {v} vertices; BFS cross-check capped at "
            f"{MAX_BFS_VERTICES}"
        )
    m = k + 1
    degree_formula = m * (n - m)
    diameter_formula = min(m, n - m)

    index = {c: i for i, c in enumerate(circuits)}
    nbrs = [[index[b] for b in johnson_neighbors(n, c)] for c in circuits]

    is_regular = all(len(ns) == degree_formula for ns in nbrs)

    from .kernels import all_pairs_bfs

    dist = all_pairs_bfs(nbrs)
    bfs_diameter = 0
    connected = True
    metric_ok = True
    for i in range(v):
        for j in range(v):
            d = int(dist[i][j])
            if d < 0:
                connected = False
                continue
            bfs_diameter = max(bfs_diameter, d)
            if d != johnson_distance(circuits[i], circuits[j]):
                metric_ok = False
    if not connected or bfs_diameter != diameter_formula:
        raise AssertionError(
            f"BFS disagrees with closed form on J({n},{m}): "
            f"connected={connected}, bfs_diameter={bfs_diameter}, "
            f"formula={diameter_formula}"
        )
    perm = _transitivity_witness(n, circuits[0], circuits[-1])
    if relabel_mask(circuits[0], perm) != circuits[-1]:
        raise AssertionError("transitivity witness does not map first to last")
    return JohnsonStats(
        n=n,
        k=k,
        vertices=v,
        degree=degree_formula,
        diameter=diameter_formula,
        is_regular=is_regular,
        is_connected=connected,
        distance_is_metric=metric_ok,
        witness_from=circuits[0],
        witness_to=circuits[-1],
        witness_permutation=perm,
    )


def circuit_label(n: int, mask: int) -> str:
    """Human-facing label with 1-based elements, e.g. "{1,2,4}"."""
    return "{" + ",".join(str(e + 1) for e in elements_of(mask)) + "}"


def johnson_dot(n: int, k: int) -> str:
    """Graphviz source for J(n, k+1) with 1-based subset labels."""
    circuits = all_circuits(n, k)
    lines = [f'graph "J({n},{k + 1})" {{']
    for i, c in enumerate(circuits):
        lines.append(f'  v{i} [label="{circuit_label(n, c)}"];')
    for i, a in enumerate(circuits):
        for j in range(i + 1, len(circuits)):
            if johnson_adjacent(a, circuits[j]):
                lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
