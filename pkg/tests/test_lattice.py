"""Closure operator and intersection-lattice construction.

The k = 1 lattices are checked element-for-element against an independent
set-partition model: pairs {i, j} inside a common block form the support,
rank is n minus the number of blocks, and covers are single block merges.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest

from conftest import cached_lattice, cached_spec
from discarr.circuits import all_circuits
from discarr.errors import ScaleGuardError
from discarr.exactgeom import ArrangementSpec, circuit_normals, rank_of_rows
from discarr.lattice import (
    build_lattice,
    closure,
    support_from_bitstring,
    support_label,
    support_to_bitstring,
)
from discarr.rng import SplitMix64
from oracles import bell_number, partition_lattice, transitive_reduction


# ------------------------------------------------------------- bitstrings


def test_bitstring_index_zero_is_leftmost():
    assert support_to_bitstring(0b1, 6) == "100000"
    assert support_to_bitstring(0b100, 6) == "001000"
    assert support_to_bitstring(0, 3) == "000"


def test_bitstring_round_trip():
    for f in range(64):
        assert support_from_bitstring(support_to_bitstring(f, 6)) == f


def test_support_label_names_circuits():
    assert support_label(3, 1, 0b101) == "{1,2},{2,3}"
    assert support_label(3, 1, 0) == "{}"


# --------------------------------------------------------- closure operator


@pytest.mark.parametrize("n,k", [(4, 2), (5, 1)])
def test_closure_is_a_closure_operator(n, k):
    spec = cached_spec(n, k, 11)
    nbits = spec.num_circuits
    rng = SplitMix64(600 + n * 10 + k)
    for _ in range(60):
        f = rng.randbelow(1 << nbits)
        g = rng.randbelow(1 << nbits)
        cf = closure(spec, f)
        assert cf & f == f  # extensive
        assert closure(spec, cf) == cf  # idempotent
        if f & g == f:  # f subset of g
            assert cf & closure(spec, g) == cf  # monotone


def test_closure_of_empty_is_empty():
    assert closure(cached_spec(4, 2, 11), 0) == 0


def test_singletons_are_closed():
    for n, k in ((4, 1), (5, 2), (6, 3)):
        spec = cached_spec(n, k, 11)
        for i in range(spec.num_circuits):
            assert closure(spec, 1 << i) == 1 << i


def test_closure_preserves_normal_span():
    spec = cached_spec(4, 2, 11)
    normals = circuit_normals(spec)
    for f in range(1 << spec.num_circuits):
        cf = closure(spec, f)
        rows_f = [list(normals[i]) for i in range(spec.num_circuits) if f >> i & 1]
        rows_cf = [list(normals[i]) for i in range(spec.num_circuits) if cf >> i & 1]
        assert rank_of_rows(rows_cf) == rank_of_rows(rows_f)


def test_closure_pair_forces_all_four():
    # n=4, k=2: the four circuit normals span a plane, so any two of them
    # pull in the remaining two
    spec = cached_spec(4, 2, 11)
    assert spec.num_circuits == 4
    assert closure(spec, 0b0011) == 0b1111
    for i, j in combinations(range(4), 2):
        assert closure(spec, (1 << i) | (1 << j)) == 0b1111


# ------------------------------------------------- partition-lattice oracle


@pytest.mark.parametrize("n,expected", [(3, 5), (4, 15), (5, 52)])
def test_k1_matches_set_partition_model(n, expected):
    lat = cached_lattice(n, 1, 11)
    supports, rank_of, oracle_cover_supports = partition_lattice(n)
    assert bell_number(n) == expected
    assert lat.num_elements == expected

    got_supports = sorted(e.support for e in lat.elements)
    assert got_supports == supports

    for e in lat.elements:
        assert e.rank == rank_of[e.support]

    got_covers = {
        (lat.elements[lo].support, lat.elements[hi].support) for lo, hi in lat.covers
    }
    assert got_covers == oracle_cover_supports


def test_levels_give_stirling_rank_counts():
    lat = cached_lattice(5, 1, 11)
    # Stirling numbers of the second kind S(5, 5-r)
    assert [len(level) for level in lat.levels] == [1, 10, 25, 15, 1]
    assert sum(len(level) for level in lat.levels) == 52


# ----------------------------------------------------- structural properties


def test_elements_sorted_by_rank_then_bitstring(lat41):
    n_bits = lat41.n_bits
    keys = [(e.rank, support_to_bitstring(e.support, n_bits)) for e in lat41.elements]
    assert keys == sorted(keys)


def test_bottom_and_top(lat41):
    assert lat41.elements[lat41.bottom].support == 0
    assert lat41.elements[lat41.bottom].rank == 0
    assert lat41.elements[lat41.top].support == (1 << lat41.n_bits) - 1


def test_support_order_equals_span_order(lat41):
    spec = lat41.spec
    normals = circuit_normals(spec)
    n_bits = lat41.n_bits

    def span_rank(f):
        return rank_of_rows([list(normals[i]) for i in range(n_bits) if f >> i & 1])

    for a in lat41.elements:
        for b in lat41.elements:
            support_le = a.support & b.support == a.support
            # span containment: adding a's rows to b's gains nothing
            rows_b = [list(normals[i]) for i in range(n_bits) if b.support >> i & 1]
            rows_ab = rows_b + [
                list(normals[i]) for i in range(n_bits) if a.support >> i & 1
            ]
            span_le = rank_of_rows(rows_ab) == rank_of_rows(rows_b)
            assert support_le == span_le


def test_covers_are_transitive_reduction(lat42):
    ids = list(range(lat42.num_elements))
    lt = {
        (a, b)
        for a in ids
        for b in ids
        if a != b and lat42.elements[a].support & lat42.elements[b].support == lat42.elements[a].support
    }
    assert set(lat42.covers) == transitive_reduction(lt, ids)


def test_leq_and_interval(lat31):
    top = lat31.top
    assert lat31.leq(lat31.bottom, top)
    assert not lat31.leq(top, lat31.bottom)
    assert lat31.interval(2, 2) == [2]
    assert lat31.interval(lat31.bottom, top) == list(range(5))
    atom = 1
    assert lat31.interval(lat31.bottom, atom) == [lat31.bottom, atom]
    with pytest.raises(ValueError):
        lat31.interval(1, 2)


def test_element_lookup(lat31):
    e = lat31.element_by_support(0)
    assert e.rank == 0
    assert lat31.id_by_support(0b110) is None
    assert lat31.element_by_support((1 << lat31.n_bits) - 1).rank == 2


def test_rank_counts(lat41):
    assert lat41.rank_counts() == [1, 6, 7, 1]


def test_basis_rows_span_support(lat42):
    normals = circuit_normals(lat42.spec)
    for e in lat42.elements:
        rows = e.basis.row_list()
        assert e.basis.rows == e.rank
        support_rows = [
            list(normals[i]) for i in range(lat42.n_bits) if e.support >> i & 1
        ]
        assert rank_of_rows([list(r) for r in rows]) == e.rank
        assert rank_of_rows([list(r) for r in rows] + support_rows) == e.rank


# ------------------------------------------------------------ invariance


def test_lattice_is_independent_of_generic_seed():
    a = build_lattice(ArrangementSpec.generate(4, 1, seed=1))
    b = build_lattice(ArrangementSpec.generate(4, 1, seed=2))
    assert [e.support for e in a.elements] == [e.support for e in b.elements]
    assert [e.rank for e in a.elements] == [e.rank for e in b.elements]
    assert a.covers == b.covers
    assert a.levels == b.levels


# ------------------------------------------------------------- exports


def test_json_dict_shape(lat31):
    d = lat31.to_json_dict()
    assert set(d) == {"spec", "N", "elements", "covers", "levels"}
    assert d["N"] == 3
    assert [e["id"] for e in d["elements"]] == list(range(5))
    for e in d["elements"]:
        assert set(e) == {"id", "support", "rank"}
        assert len(e["support"]) == 3
    assert d["covers"] == [[0, 1], [0, 2], [0, 3], [1, 4], [2, 4], [3, 4]]
    assert d["levels"] == [[0], [1, 2, 3], [4]]
    back = ArrangementSpec.from_json_dict(d["spec"])
    assert back == lat31.spec


def test_dot_export_mentions_ranks(lat31):
    dot = lat31.to_dot()
    assert "rank 0" in dot and "rank 2" in dot
    assert dot.count(" -- ") == len(lat31.covers)


# --------------------------------------------------------------- guards


def test_build_guard_on_support_width():
    spec = ArrangementSpec.generate(12, 1, seed=1)  # 66 circuits
    with pytest.raises(ScaleGuardError):
        build_lattice(spec)
