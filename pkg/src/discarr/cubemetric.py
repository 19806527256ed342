"""Support-metric model of an arrangement lattice inside a hypercube.

Supports embed into the hypercube {0,1}^N via their characteristic
vectors; the candidate metric is Hamming distance, the candidate median
is the coordinatewise majority.  Everything here runs in one of two
admissibility modes:

  FREE       every N-bit support is admissible; the graph on supports is
             the hypercube Q_N, where the metric and median statements
             are identities of bit algebra.
  GEOMETRIC  only the closed supports of a built Lattice are admissible;
             the statements become claims about an actual arrangement and
             are checked, not assumed.

A geometric lattice yields two graph readings, and the verifiers report
on both rather than picking one: "covers" is the Hasse diagram (edges =
transitive-reduction covers), "toggles" joins closed supports differing
in exactly one circuit.  In FREE mode the two readings coincide (the
cover graph of the subset order on all supports is the toggle graph), so
reports carry a single "covers" entry.

Verdicts are never assumed: every claim is checked against BFS distances
computed from the graph, with explicit counterexamples on failure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ScaleGuardError
from .kernels import (
    MAX_EXAMPLES,
    MEDIAN_VERTEX_CAP,
    all_pairs_bfs,
    hamming_audit,
    median_defects,
)
from .lattice import Lattice, support_to_bitstring

#: Scale guard for whole-graph verification (distance matrices are V x V).
VERIFY_SUPPORT_CAP = 5000

#: Scale guard for geodesic/poset search (state space is 2^|difference|).
MAX_GEODESIC_DIFF = 12

#: Interval verification cap on the cube dimension |F(y) \ F(x)|.
MAX_INTERVAL_DIFF = 10

#: Deterministic sampling budgets for the pairwise claims.
GEODESIC_CLAIM_PAIR_CAP = 200
INTERVAL_CLAIM_PAIR_CAP = 100
CLAIM_PAIR_MAX_DIFF = 8

CLAIM_NAMES = ("cover", "distance", "partialcube", "median", "geodesic", "interval")


@dataclass(frozen=True)
class Mode:
    """Admissibility regime: FREE over all N-bit supports, or GEOMETRIC
    over the closed supports of a lattice."""

    kind: str
    n_bits: int
    lattice: Lattice | None = None

    def __post_init__(self):
        if self.kind not in ("free", "geometric"):
            raise ValueError(f"unknown mode kind {self.kind!r}")
        if (self.kind == "geometric") != (self.lattice is not None):
            raise ValueError("geometric mode needs a lattice, free mode none")

    def is_admissible(self, f: int) -> bool:
        if self.kind == "free":
            return 0 <= f < 1 << self.n_bits
        return self.lattice.id_by_support(f) is not None

    def admissible_supports(self) -> list[int]:
        """Vertex list in canonical order: numeric for FREE, lattice id
        order (rank, then support bitstring) for GEOMETRIC."""
        if self.kind == "free":
            return list(range(1 << self.n_bits))
        return [e.support for e in self.lattice.elements]

    def num_admissible(self) -> int:
        if self.kind == "free":
            return 1 << self.n_bits
        return self.lattice.num_elements

    def readings(self) -> tuple[str, ...]:
        return ("covers",) if self.kind == "free" else ("covers", "toggles")


def free_mode(n_bits: int) -> Mode:
    return Mode(kind="free", n_bits=n_bits)


def geometric_mode(lat: Lattice) -> Mode:
    return Mode(kind="geometric", n_bits=lat.n_bits, lattice=lat)


def distance(f: int, g: int) -> int:
    """Hamming distance of support vectors: |f symmetric-difference g|."""
    return (f ^ g).bit_count()


@dataclass(frozen=True)
class MedianResult:
    support: int
    admissible: bool


def median(f: int, g: int, h: int, mode: Mode) -> MedianResult:
    """Coordinatewise majority of three supports, plus whether the mode
    admits it.  The majority point is equidistant-on-geodesics for the
    three pairs by bit algebra, whatever the mode says."""
    m = (f & g) | (g & h) | (h & f)
    return MedianResult(support=m, admissible=mode.is_admissible(m))


class ModeGraph:
    """One graph reading of a mode: vertices, adjacency, cached BFS."""

    __slots__ = ("mode", "reading", "vertices", "index", "neighbors", "_dist")

    def __init__(self, mode: Mode, reading: str):
        if reading not in ("covers", "toggles"):
            raise ValueError(f"unknown reading {reading!r}")
        self.mode = mode
        self.reading = reading
        self.vertices = mode.admissible_supports()
        self.index = {f: i for i, f in enumerate(self.vertices)}
        if mode.kind == "geometric" and reading == "covers":
            nbrs = [[] for _ in self.vertices]
            for lo, hi in mode.lattice.covers:
                nbrs[lo].append(hi)
                nbrs[hi].append(lo)
            self.neighbors = [sorted(ns) for ns in nbrs]
        else:
            # single-circuit toggles (for FREE this IS the cover graph)
            self.neighbors = []
            for f in self.vertices:
                ns = []
                for i in range(mode.n_bits):
                    j = self.index.get(f ^ 1 << i)
                    if j is not None:
                        ns.append(j)
                self.neighbors.append(ns)
        self._dist = None

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def dist(self):
        if self._dist is None:
            self._dist = all_pairs_bfs(self.neighbors)
        return self._dist

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j) for i, ns in enumerate(self.neighbors) for j in ns if i < j
        ]

    def bitstring(self, vertex: int) -> str:
        return support_to_bitstring(self.vertices[vertex], self.mode.n_bits)


def _guard_verify_scale(mode: Mode) -> None:
    v = mode.num_admissible()
    if v > VERIFY_SUPPORT_CAP:
        raise ScaleGuardError(
            f"{v} admissible supports exceed the verification cap of "
            f"{VERIFY_SUPPORT_CAP}"
        )


@dataclass(frozen=True)
class ClaimReport:
    claim: str
    graph: str
    verdict: str
    checked: int
    counterexamples: tuple[dict, ...]

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim,
            "graph": self.graph,
            "verdict": self.verdict,
            "checked": self.checked,
            "counterexamples": [dict(c) for c in self.counterexamples],
        }


def _claim(claim, graph, checked, counterexamples) -> ClaimReport:
    return ClaimReport(
        claim=claim,
        graph=graph,
        verdict="pass" if not counterexamples else "fail",
        checked=checked,
        counterexamples=tuple(counterexamples[:MAX_EXAMPLES]),
    )


def _cover_pairs(mode: Mode) -> list[tuple[int, int]]:
    """Cover pairs as support masks (lo, hi)."""
    if mode.kind == "geometric":
        els = mode.lattice.elements
        return [(els[lo].support, els[hi].support) for lo, hi in mode.lattice.covers]
    g = ModeGraph(mode, "covers")
    return [(g.vertices[i], g.vertices[j]) for i, j in g.edges()]


def verify_cover_lemma(mode: Mode) -> ClaimReport:
    """Does every cover step change the support by exactly one circuit?"""
    _guard_verify_scale(mode)
    n = mode.n_bits
    bad = []
    pairs = _cover_pairs(mode)
    for lo, hi in pairs:
        sd = distance(lo, hi)
        if sd != 1:
            bad.append(
                {
                    "lo": support_to_bitstring(lo, n),
                    "hi": support_to_bitstring(hi, n),
                    "symdiff": sd,
                    "equation": f"|F(hi) xor F(lo)| = {sd}, expected 1",
                }
            )
    return _claim("cover", "covers", len(pairs), bad)


def _isometry_violations(graph: ModeGraph):
    checked, _violations, raw = hamming_audit(graph.vertices, graph.dist())
    out = []
    for i, j, d, h in raw:
        eq = (
            f"d_graph = {d} != {h} = |F(u) xor F(v)|"
            if d >= 0
            else f"u, v unreachable in graph but |F(u) xor F(v)| = {h}"
        )
        out.append(
            {
                "u": graph.bitstring(i),
                "v": graph.bitstring(j),
                "d_graph": d,
                "d_hamming": h,
                "equation": eq,
            }
        )
    return checked, out


def verify_distance_claim(mode: Mode, reading: str) -> ClaimReport:
    """BFS distance on the reading's graph vs Hamming distance, all pairs."""
    _guard_verify_scale(mode)
    graph = ModeGraph(mode, reading)
    checked, bad = _isometry_violations(graph)
    return _claim("distance", reading, checked, bad)


def verify_partialcube_claim(mode: Mode, reading: str) -> ClaimReport:
    """Isometric embedding into Q_N under support labels: every edge is a
    single toggle and graph distance equals Hamming distance."""
    _guard_verify_scale(mode)
    graph = ModeGraph(mode, reading)
    bad = []
    edges = graph.edges()
    for i, j in edges:
        sd = distance(graph.vertices[i], graph.vertices[j])
        if sd != 1:
            bad.append(
                {
                    "u": graph.bitstring(i),
                    "v": graph.bitstring(j),
                    "symdiff": sd,
                    "equation": f"edge with |F(u) xor F(v)| = {sd}, expected 1",
                }
            )
    checked, iso_bad = _isometry_violations(graph)
    return _claim("partialcube", reading, len(edges) + checked, bad + iso_bad)


def verify_median_claim(mode: Mode, reading: str) -> ClaimReport:
    """Unique-median property over all vertex triples of the reading."""
    _guard_verify_scale(mode)
    graph = ModeGraph(mode, reading)
    v = graph.num_vertices
    if v > MEDIAN_VERTEX_CAP:
        raise ScaleGuardError(
            f"median scan needs V <= {MEDIAN_VERTEX_CAP}, got {v}"
        )
    dist = graph.dist()
    for i in range(v):
        row = dist[i]
        for j in range(v):
            if row[j] < 0:
                return _claim(
                    "median",
                    reading,
                    0,
                    [
                        {
                            "u": graph.bitstring(i),
                            "v": graph.bitstring(j),
                            "equation": "graph is disconnected; not a median graph",
                        }
                    ],
                )
    checked, _defects, raw = median_defects(dist)
    bad = [
        {
            "u": graph.bitstring(u),
            "v": graph.bitstring(w),
            "w": graph.bitstring(x),
            "meet_size": c,
            "equation": f"|I(u,v) & I(u,w) & I(v,w)| = {c}, expected 1",
        }
        for u, w, x, c in raw
    ]
    return _claim("median", reading, checked, bad)


def verify_distance_theorem(mode: Mode) -> list[ClaimReport]:
    """Cover-step claim plus the distance claim on every graph reading."""
    out = [verify_cover_lemma(mode)]
    for reading in mode.readings():
        out.append(verify_distance_claim(mode, reading))
    return out


def verify_partial_cube(mode: Mode) -> list[ClaimReport]:
    return [verify_partialcube_claim(mode, r) for r in mode.readings()]


def verify_median_graph(mode: Mode) -> list[ClaimReport]:
    return [verify_median_claim(mode, r) for r in mode.readings()]


@dataclass(frozen=True)
class DependencyPoset:
    """Precedence forced on single-circuit modifications between two
    supports.  ground lists the differing circuit indices; a relation
    (i, j) says circuit i must be toggled before circuit j in every
    admissible complete sequence.  When NO admissible complete sequence
    exists the universal quantification is vacuous and every ordered pair
    is related; linear-extension counting then yields 0, matching the
    geodesic count."""

    ground: tuple[int, ...]
    relations: tuple[tuple[int, int], ...]
    source: tuple[int, int, str]

    def to_json_dict(self) -> dict:
        return {
            "ground": list(self.ground),
            "relations": [list(r) for r in self.relations],
        }


def _mask_admissibility(f: int, members: tuple[int, ...], mode: Mode):
    """adm[m] over subsets m of the difference set: is f with exactly the
    circuits of m toggled admissible?"""
    s = len(members)
    toggles = [1 << b for b in members]
    supp = [0] * (1 << s)
    adm = [False] * (1 << s)
    adm[0] = mode.is_admissible(f)
    supp[0] = f
    for m in range(1, 1 << s):
        low = (m & -m).bit_length() - 1
        supp[m] = supp[m & (m - 1)] ^ toggles[low]
        adm[m] = mode.is_admissible(supp[m])
    return adm


def _reachability(adm):
    """forward[m]: an admissible toggle-by-toggle path exists from the
    empty mask to m; backward[m]: from m to the full mask."""
    size = len(adm)
    s = size.bit_length() - 1
    forward = [False] * size
    forward[0] = adm[0]
    for m in range(1, size):
        if not adm[m]:
            continue
        mm = m
        while mm:
            b = mm & -mm
            if forward[m ^ b]:
                forward[m] = True
                break
            mm ^= b
    backward = [False] * size
    full = size - 1
    backward[full] = adm[full]
    for m in range(full - 1, -1, -1):
        if not adm[m]:
            continue
        for i in range(s):
            b = 1 << i
            if not m & b and backward[m | b]:
                backward[m] = True
                break
    return forward, backward


def dependency_poset(f: int, g: int, mode: Mode) -> DependencyPoset:
    """Decide i-before-j for every ordered pair of differing circuits by
    exhaustive reachability over admissible intermediate supports."""
    diff = f ^ g
    members = tuple(i for i in range(mode.n_bits) if diff >> i & 1)
    s = len(members)
    if s > MAX_GEODESIC_DIFF:
        raise ScaleGuardError(
            f"|difference| = {s} exceeds the {MAX_GEODESIC_DIFF} search cap"
        )
    if s == 0:
        return DependencyPoset(ground=(), relations=(), source=(f, g, mode.kind))
    adm = _mask_admissibility(f, members, mode)
    forward, backward = _reachability(adm)
    # can_precede[j][i]: some complete admissible sequence toggles j
    # strictly before i (a live mask contains j but not i)
    can_precede = [[False] * s for _ in range(s)]
    for m in range(1 << s):
        if forward[m] and backward[m]:
            inside = [i for i in range(s) if m >> i & 1]
            outside = [i for i in range(s) if not m >> i & 1]
            for j in inside:
                row = can_precede[j]
                for i in outside:
                    row[i] = True
    relations = []
    for i in range(s):
        for j in range(s):
            if i != j and not can_precede[j][i]:
                relations.append((members[i], members[j]))
    return DependencyPoset(
        ground=members, relations=tuple(relations), source=(f, g, mode.kind)
    )


def count_linear_extensions(poset: DependencyPoset) -> int:
    """Number of total orders of ground compatible with the relations
    (subset-mask dynamic program; 0 when the relations contain a cycle)."""
    members = poset.ground
    s = len(members)
    pos = {b: i for i, b in enumerate(members)}
    pred = [0] * s
    for lo, hi in poset.relations:
        pred[pos[hi]] |= 1 << pos[lo]
    ext = [0] * (1 << s)
    ext[0] = 1
    for m in range(1, 1 << s):
        total = 0
        mm = m
        rest = m
        while mm:
            b = mm & -mm
            i = b.bit_length() - 1
            if pred[i] & ~(rest ^ b) == 0:
                total += ext[m ^ b]
            mm ^= b
        ext[m] = total
    return ext[(1 << s) - 1]


@dataclass(frozen=True)
class GeodesicReport:
    """Direct geodesic count next to the linear-extension count of the
    dependency poset; `agree` is the bijection claim's verdict for this
    pair.  paths (optional) lists toggled circuit indices per step, in
    lexicographic order."""

    f: int
    g: int
    ground: tuple[int, ...]
    count: int
    linear_extensions: int
    agree: bool
    poset: DependencyPoset
    paths: tuple[tuple[int, ...], ...] | None = None


def geodesics(
    f: int, g: int, mode: Mode, enumerate_paths: bool = False
) -> GeodesicReport:
    """Count (optionally list) admissible single-toggle geodesics f -> g.

    A geodesic toggles each differing circuit exactly once with every
    intermediate support admissible.  The count is compared against the
    linear extensions of the dependency poset.
    """
    diff = f ^ g
    members = tuple(i for i in range(mode.n_bits) if diff >> i & 1)
    s = len(members)
    if s > MAX_GEODESIC_DIFF:
        raise ScaleGuardError(
            f"|difference| = {s} exceeds the {MAX_GEODESIC_DIFF} search cap"
        )
    adm = _mask_admissibility(f, members, mode)
    cnt = [0] * (1 << s)
    cnt[0] = 1 if adm[0] else 0
    for m in range(1, 1 << s):
        if not adm[m]:
            continue
        total = 0
        mm = m
        while mm:
            b = mm & -mm
            total += cnt[m ^ b]
            mm ^= b
        cnt[m] = total
    count = cnt[(1 << s) - 1]

    paths = None
    if enumerate_paths:
        full = (1 << s) - 1
        acc = []
        if adm[0]:
            stack = [(0, ())]
            while stack:
                m, seq = stack.pop()
                if m == full:
                    acc.append(seq)
                    continue
                # push in reverse so the smallest circuit index pops first
                for i in range(s - 1, -1, -1):
                    b = 1 << i
                    if not m & b and adm[m | b]:
                        stack.append((m | b, seq + (members[i],)))
        paths = tuple(sorted(acc))
        if len(paths) != count:
            raise AssertionError(
                f"geodesic enumeration found {len(paths)}, count DP says {count}"
            )

    poset = dependency_poset(f, g, mode)
    linext = count_linear_extensions(poset)
    return GeodesicReport(
        f=f,
        g=g,
        ground=members,
        count=count,
        linear_extensions=linext,
        agree=count == linext,
        poset=poset,
        paths=paths,
    )


def verify_geodesic_claim(
    mode: Mode,
    max_pairs: int = GEODESIC_CLAIM_PAIR_CAP,
    max_diff: int = CLAIM_PAIR_MAX_DIFF,
) -> ClaimReport:
    """Geodesic count == linear-extension count over a deterministic
    sample: the first max_pairs vertex pairs (in canonical vertex order)
    whose difference has size between 1 and max_diff."""
    _guard_verify_scale(mode)
    supports = mode.admissible_supports()
    n = mode.n_bits
    bad = []
    checked = 0
    for i in range(len(supports)):
        if checked >= max_pairs:
            break
        for j in range(i + 1, len(supports)):
            if checked >= max_pairs:
                break
            s = distance(supports[i], supports[j])
            if not 1 <= s <= max_diff:
                continue
            rep = geodesics(supports[i], supports[j], mode)
            checked += 1
            if not rep.agree:
                bad.append(
                    {
                        "u": support_to_bitstring(supports[i], n),
                        "v": support_to_bitstring(supports[j], n),
                        "paths": rep.count,
                        "linear_extensions": rep.linear_extensions,
                        "equation": (
                            f"{rep.count} geodesics != "
                            f"{rep.linear_extensions} linear extensions"
                        ),
                    }
                )
    return _claim("geodesic", "covers", checked, bad)


@dataclass(frozen=True)
class IntervalCubeReport:
    """Checks of one interval [x, y] against the cube of dimension
    |F(y) \\ F(x)|: element count, the union bijection, cover-subgraph
    isomorphism with Q_d, and convexity in the full cover graph."""

    x: int
    y: int
    dim: int
    count: int
    expected: int
    size_ok: bool
    bijection_ok: bool
    cube_ok: bool
    convex_ok: bool
    counterexamples: tuple[dict, ...]

    @property
    def all_ok(self) -> bool:
        return self.size_ok and self.bijection_ok and self.cube_ok and self.convex_ok

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "count": self.count,
            "expected": self.expected,
            "size_ok": self.size_ok,
            "bijection_ok": self.bijection_ok,
            "cube_ok": self.cube_ok,
            "convex_ok": self.convex_ok,
            "verdict": "pass" if self.all_ok else "fail",
            "counterexamples": [dict(c) for c in self.counterexamples],
        }


def verify_interval_cube(
    x: int, y: int, mode: Mode, graph: ModeGraph | None = None
) -> IntervalCubeReport:
    """Check that the interval [x, y] is the cube on F(y) \\ F(x).

    (a) admissible supports between x and y number 2^d;
    (b) T -> x | T is a bijection from subsets of the difference onto
        the interval (every union admissible);
    (c) the induced cover subgraph is Q_d: connected, d-regular, and BFS
        distance equals Hamming distance of the T-labels;
    (d) the interval is convex: no geodesic of the full cover graph
        between interval members leaves the interval.
    """
    n = mode.n_bits
    if not mode.is_admissible(x) or not mode.is_admissible(y):
        raise ValueError("interval endpoints must be admissible supports")
    if x & ~y:
        raise ValueError("x must be contained in y")
    diff = y & ~x
    d = diff.bit_count()
    if d > MAX_INTERVAL_DIFF:
        raise ScaleGuardError(
            f"|F(y) \\ F(x)| = {d} exceeds the {MAX_INTERVAL_DIFF} cap"
        )
    bits = [i for i in range(n) if diff >> i & 1]
    bad = []

    members = []
    missing = []
    for t in range(1 << d):
        sub = 0
        tt = t
        while tt:
            b = tt & -tt
            sub |= 1 << bits[b.bit_length() - 1]
            tt ^= b
        z = x | sub
        if mode.is_admissible(z):
            members.append(z)
        else:
            missing.append(z)
    count = len(members)
    expected = 1 << d
    size_ok = count == expected
    bijection_ok = not missing
    for z in missing[:MAX_EXAMPLES]:
        bad.append(
            {
                "x": support_to_bitstring(x, n),
                "y": support_to_bitstring(y, n),
                "z": support_to_bitstring(z, n),
                "reason": "union of F(x) with a subset of the difference "
                "is not an admissible support",
            }
        )

    if graph is None:
        graph = ModeGraph(mode, "covers")
    member_ids = [graph.index[z] for z in members]
    member_set = set(member_ids)

    # (c) induced subgraph on the interval against Q_d
    local = {vid: i for i, vid in enumerate(member_ids)}
    induced = [
        [local[w] for w in graph.neighbors[vid] if w in member_set]
        for vid in member_ids
    ]
    cube_ok = True
    for i, ns in enumerate(induced):
        if len(ns) != d:
            cube_ok = False
            if len(bad) < MAX_EXAMPLES:
                bad.append(
                    {
                        "z": support_to_bitstring(members[i], n),
                        "reason": f"induced degree {len(ns)}, expected {d}",
                    }
                )
    idist = all_pairs_bfs(induced)
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            h = distance(members[i], members[j])
            dd = int(idist[i][j])
            if dd != h:
                cube_ok = False
                if len(bad) < MAX_EXAMPLES:
                    bad.append(
                        {
                            "u": support_to_bitstring(members[i], n),
                            "v": support_to_bitstring(members[j], n),
                            "reason": f"induced distance {dd}, "
                            f"Hamming distance {h}",
                        }
                    )

    # (d) convexity inside the full cover graph
    dist = graph.dist()
    convex_ok = True
    inside = np.zeros(graph.num_vertices, dtype=bool)
    inside[member_ids] = True
    for ai in range(len(member_ids)):
        a = member_ids[ai]
        da = dist[a]
        for bi in range(ai + 1, len(member_ids)):
            b = member_ids[bi]
            dab = int(da[b])
            if dab < 0:
                convex_ok = False
                if len(bad) < MAX_EXAMPLES:
                    bad.append(
                        {
                            "u": graph.bitstring(a),
                            "v": graph.bitstring(b),
                            "reason": "interval members unreachable in cover graph",
                        }
                    )
                continue
            db = dist[b]
            on_geodesic = (da >= 0) & (db >= 0) & (da + db == dab)
            outside = np.nonzero(on_geodesic & ~inside)[0]
            if outside.size:
                convex_ok = False
                if len(bad) < MAX_EXAMPLES:
                    m = int(outside[0])
                    bad.append(
                        {
                            "u": graph.bitstring(a),
                            "v": graph.bitstring(b),
                            "z": graph.bitstring(m),
                            "reason": "vertex outside the interval lies on "
                            "a geodesic between interval members",
                        }
                    )

    return IntervalCubeReport(
        x=x,
        y=y,
        dim=d,
        count=count,
        expected=expected,
        size_ok=size_ok,
        bijection_ok=bijection_ok,
        cube_ok=cube_ok,
        convex_ok=convex_ok,
        counterexamples=tuple(bad[:MAX_EXAMPLES]),
    )


def verify_interval_claim(
    mode: Mode,
    max_pairs: int = INTERVAL_CLAIM_PAIR_CAP,
    max_diff: int = CLAIM_PAIR_MAX_DIFF,
) -> ClaimReport:
    """Interval-cube checks over a deterministic sample of nested pairs:
    the first max_pairs pairs (canonical vertex order) with difference
    size between 1 and max_diff."""
    _guard_verify_scale(mode)
    supports = mode.admissible_supports()
    n = mode.n_bits
    graph = ModeGraph(mode, "covers")
    bad = []
    checked = 0
    for i in range(len(supports)):
        if checked >= max_pairs:
            break
        for j in range(len(supports)):
            if checked >= max_pairs:
                break
            x, y = supports[i], supports[j]
            if x == y or x & ~y:
                continue
            if not 1 <= (y & ~x).bit_count() <= max_diff:
                continue
            rep = verify_interval_cube(x, y, mode, graph)
            checked += 1
            if not rep.all_ok:
                entry = {
                    "x": support_to_bitstring(x, n),
                    "y": support_to_bitstring(y, n),
                    "size_ok": rep.size_ok,
                    "bijection_ok": rep.bijection_ok,
                    "cube_ok": rep.cube_ok,
                    "convex_ok": rep.convex_ok,
                }
                if rep.counterexamples:
                    entry["first_counterexample"] = dict(rep.counterexamples[0])
                bad.append(entry)
    return _claim("interval", "covers", checked, bad)


def run_claims(mode: Mode, claims) -> list[ClaimReport]:
    """Run the requested claims in canonical order, every graph reading
    of the mode for the graph-dependent ones."""
    wanted = []
    for c in claims:
        if c not in CLAIM_NAMES:
            raise ValueError(f"unknown claim {c!r}; choose from {CLAIM_NAMES}")
        if c not in wanted:
            wanted.append(c)
    out = []
    for claim in CLAIM_NAMES:
        if claim not in wanted:
            continue
        if claim == "cover":
            out.append(verify_cover_lemma(mode))
        elif claim == "distance":
            out.extend(verify_distance_claim(mode, r) for r in mode.readings())
        elif claim == "partialcube":
            out.extend(verify_partialcube_claim(mode, r) for r in mode.readings())
        elif claim == "median":
            out.extend(verify_median_claim(mode, r) for r in mode.readings())
        elif claim == "geodesic":
            out.append(verify_geodesic_claim(mode))
        elif claim == "interval":
            out.append(verify_interval_claim(mode))
    return out
