from __future__ import annotations

from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from discarr.circuits import (
    JohnsonStats,
    all_circuits,
    circuit_label,
    colex_rank,
    colex_unrank,
    elements_of,
    hypersimplex_vertex,
    johnson_adjacent,
    johnson_distance,
    johnson_dot,
    johnson_neighbors,
    johnson_stats,
    mask_from_elements,
    relabel_mask,
)
from discarr.errors import ScaleGuardError
from discarr.rng import SplitMix64
from oracles import bfs_distances


def test_mask_round_trip():
    for elems in ((0,), (0, 2, 5), (1, 3), (4,)):
        assert elements_of(mask_from_elements(elems)) == sorted(elems)


def test_colex_rank_pinned_values():
    assert colex_rank(mask_from_elements([0, 1, 2])) == 0
    assert colex_rank(mask_from_elements([0, 1, 3])) == 1
    assert colex_rank(mask_from_elements([1, 2, 3])) == 3
    # pairs: rank of {i,j} is C(j,2)+i
    for i, j in combinations(range(6), 2):
        assert colex_rank(mask_from_elements([i, j])) == comb(j, 2) + i


def test_colex_rank_unrank_round_trip_exhaustive():
    for n in range(1, 9):
        for size in range(1, min(n, 4) + 1):
            masks = [mask_from_elements(c) for c in combinations(range(n), size)]
            ranks = sorted(colex_rank(m) for m in masks)
            assert ranks == list(range(comb(n, size)))
            for m in masks:
                assert colex_unrank(colex_rank(m), size) == m


@given(st.sets(st.integers(0, 40), min_size=1, max_size=6))
def test_colex_unrank_inverts_rank(elems):
    m = mask_from_elements(sorted(elems))
    assert colex_unrank(colex_rank(m), len(elems)) == m


def test_all_circuits_sorted_by_colex_rank():
    cs = all_circuits(5, 2)
    assert len(cs) == comb(5, 3)
    assert [colex_rank(c) for c in cs] == list(range(len(cs)))
    for c in cs:
        assert bin(c).count("1") == 3


def test_all_circuits_guard():
    with pytest.raises(ScaleGuardError):
        all_circuits(100, 3)


def test_johnson_adjacency_is_hamming_two():
    cs = all_circuits(5, 1)
    for a in cs:
        for b in cs:
            expect = bin(a ^ b).count("1") == 2 and a != b
            assert johnson_adjacent(a, b) == expect


def test_johnson_distance_matches_intersection_formula():
    cs = all_circuits(7, 2)
    for a in cs:
        for b in cs:
            inter = bin(a & b).count("1")
            assert johnson_distance(a, b) == 3 - inter


@pytest.mark.parametrize("n,k", [(5, 1), (6, 2), (7, 3)])
def test_johnson_distance_equals_bfs(n, k):
    cs = all_circuits(n, k)
    adj = {c: johnson_neighbors(n, c) for c in cs}
    for src in cs:
        dist = bfs_distances(adj, src)
        for dst in cs:
            assert dist[dst] == johnson_distance(src, dst)


def test_neighbors_sorted_and_regular():
    for n, k in ((5, 1), (6, 2), (7, 3)):
        deg = (k + 1) * (n - k - 1)
        for c in all_circuits(n, k):
            nbrs = johnson_neighbors(n, c)
            assert len(nbrs) == deg
            assert nbrs == sorted(nbrs, key=colex_rank)
            assert all(johnson_adjacent(c, m) for m in nbrs)


def test_distance_is_relabelling_invariant():
    n, k = 6, 2
    cs = all_circuits(n, k)
    rng = SplitMix64(314)
    for _ in range(100):
        # Fisher-Yates over [n]
        perm = list(range(n))
        for i in range(n - 1, 0, -1):
            j = rng.randbelow(i + 1)
            perm[i], perm[j] = perm[j], perm[i]
        a = cs[rng.randbelow(len(cs))]
        b = cs[rng.randbelow(len(cs))]
        assert johnson_distance(relabel_mask(a, perm), relabel_mask(b, perm)) == johnson_distance(a, b)


def test_hypersimplex_vertices():
    n, k = 5, 1
    for c in all_circuits(n, k):
        v = hypersimplex_vertex(n, c)
        assert len(v) == n
        assert set(v) <= {0, 1}
        assert sum(v) == k + 1
    # adjacency in the graph is euclidean distance sqrt(2) on the polytope
    for a in all_circuits(n, k):
        va = hypersimplex_vertex(n, a)
        for b in all_circuits(n, k):
            vb = hypersimplex_vertex(n, b)
            sq = sum((x - y) ** 2 for x, y in zip(va, vb))
            assert (sq == 2) == johnson_adjacent(a, b)


@pytest.mark.parametrize(
    "n,k,vertices,degree,diameter",
    [
        (5, 1, 10, 6, 2),
        (6, 2, 20, 9, 3),
        (7, 2, 35, 12, 3),
        (7, 3, 35, 12, 3),
        (4, 3, 1, 0, 0),
        (2, 1, 1, 0, 0),
    ],
)
def test_johnson_stats_pinned(n, k, vertices, degree, diameter):
    s = johnson_stats(n, k)
    assert isinstance(s, JohnsonStats)
    assert (s.vertices, s.degree, s.diameter) == (vertices, degree, diameter)
    assert s.is_regular and s.is_connected and s.distance_is_metric


def test_johnson_stats_witness_is_valid():
    s = johnson_stats(6, 2)
    perm = s.witness_permutation
    assert sorted(perm) == list(range(6))
    assert relabel_mask(s.witness_from, perm) == s.witness_to


def test_johnson_stats_json_shape():
    d = johnson_stats(5, 1).to_json_dict()
    assert d["vertices"] == 10 and d["degree"] == 6 and d["diameter"] == 2
    w = d["is_vertex_transitive_witness"]
    assert set(w) == {"from", "to", "permutation"}
    assert sorted(w["permutation"]) == [1, 2, 3, 4, 5]  # 1-based labels


def test_johnson_stats_guard():
    with pytest.raises(ScaleGuardError):
        johnson_stats(102, 1)


def test_circuit_label_one_based():
    assert circuit_label(5, mask_from_elements([0, 1, 3])) == "{1,2,4}"


def test_dot_export_lists_every_vertex_and_edge():
    dot = johnson_dot(4, 1)
    for c in all_circuits(4, 1):
        assert circuit_label(4, c) in dot
    edges = dot.count(" -- ")
    assert edges == 6 * 4 // 2  # C(4,2) vertices of degree 4, each edge once
