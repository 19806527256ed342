"""Intersection lattice of a discriminantal arrangement as a closure system.

Every intersection of circuit hyperplanes is labelled by its support: the
set of ALL circuits whose hyperplane contains it.  A support is closed
when it already contains every circuit whose normal lies in the span of
its own normals; the closed supports, ordered by containment, form the
lattice.  The arrangement in translate space is central (each hyperplane
passes through the origin), so every intersection is nonempty and no
feasibility test beyond closure is needed.

Supports are N-bit masks with bit i = circuit of colex rank i.  The
serialized form is a string of '0'/'1' with index 0 leftmost; for a fixed
N, lexicographic order on these strings equals numeric order of the
binary value, which is the tie-break used everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .circuits import all_circuits, circuit_label
from .errors import ScaleGuardError
from .exactgeom import ArrangementSpec, RationalMatrix, _EchelonSpan, circuit_normals

#: Support bit width cap: single-word bitsets keep verification loops fast.
MAX_SUPPORT_BITS = 64

#: Element count guard for build_lattice.
MAX_ELEMENTS = 10**6


def support_to_bitstring(f: int, n_bits: int) -> str:
    """Serialize a support mask; character i (leftmost = 0) is bit i."""
    return "".join("1" if f >> i & 1 else "0" for i in range(n_bits))


def support_from_bitstring(s: str) -> int:
    if set(s) - {"0", "1"}:
        raise ValueError(f"not a bitstring: {s!r}")
    f = 0
    for i, ch in enumerate(s):
        if ch == "1":
            f |= 1 << i
    return f


def support_label(spec_n: int, k: int, f: int) -> str:
    """Human-facing support: 1-based circuit sets, e.g. "{1,2},{1,3}"."""
    circuits = all_circuits(spec_n, k)
    names = [circuit_label(spec_n, circuits[i]) for i in range(len(circuits)) if f >> i & 1]
    return ",".join(names) if names else "{}"


def _span_of(spec: ArrangementSpec, f: int) -> _EchelonSpan:
    normals = circuit_normals(spec)
    rows = [normals[i] for i in range(len(normals)) if f >> i & 1]
    return _EchelonSpan(rows, spec.n)


def closure(spec: ArrangementSpec, f: int) -> int:
    """Closed support generated by f: add every circuit whose normal lies
    in the span of f's normals.  Idempotent, extensive, monotone."""
    return _close(spec, f)[0]


def _close(spec: ArrangementSpec, f: int) -> tuple[int, int]:
    """(closed support, rank of the span)."""
    spec.require_generic()
    normals = circuit_normals(spec)
    span = _span_of(spec, f)
    g = f
    for i, v in enumerate(normals):
        if not g >> i & 1 and span.contains(v):
            g |= 1 << i
    return g, span.rank


@dataclass(frozen=True)
class LatticeElement:
    """One intersection subspace: closed support, codimension, normal basis."""

    support: int
    rank: int
    basis: RationalMatrix


@dataclass(frozen=True)
class Lattice:
    """All closed supports of an arrangement with rank grading and covers.

    Elements are sorted by (rank, support bitstring); ids are positions in
    that order.  covers is the transitive reduction of containment; levels
    groups element ids by rank.
    """

    spec: ArrangementSpec
    n_bits: int
    elements: tuple[LatticeElement, ...]
    covers: tuple[tuple[int, int], ...]
    levels: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {e.support: i for i, e in enumerate(self.elements)}
        )

    @property
    def num_elements(self) -> int:
        return len(self.elements)

    def element_by_support(self, f: int):
        """The element with this support, or None when f is not closed."""
        i = self._index.get(f)
        return None if i is None else self.elements[i]

    def id_by_support(self, f: int):
        return self._index.get(f)

    def leq(self, x: int, y: int) -> bool:
        fx = self.elements[x].support
        fy = self.elements[y].support
        return fx & ~fy == 0

    def interval(self, x: int, y: int) -> list[int]:
        """Element ids z with F(x) <= F(z) <= F(y), in id order (which is
        rank-then-support order)."""
        fx = self.elements[x].support
        fy = self.elements[y].support
        if fx & ~fy:
            raise ValueError(f"not comparable: {x} is not below {y}")
        return [
            i
            for i, e in enumerate(self.elements)
            if fx & ~e.support == 0 and e.support & ~fy == 0
        ]

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        # the maximum support contains every other closed support
        return max(range(len(self.elements)), key=lambda i: self.elements[i].rank)

    def rank_counts(self) -> list[int]:
        return [len(level) for level in self.levels]

    def to_json_dict(self) -> dict:
        return {
            "spec": self.spec.to_json_dict(),
            "N": self.n_bits,
            "elements": [
                {
                    "id": i,
                    "support": support_to_bitstring(e.support, self.n_bits),
                    "rank": e.rank,
                }
                for i, e in enumerate(self.elements)
            ],
            "covers": [list(c) for c in self.covers],
            "levels": [list(level) for level in self.levels],
        }

    def to_dot(self) -> str:
        """Cover graph as Graphviz source, one cluster per rank level."""
        lines = [f'graph "L(B({self.spec.n},{self.spec.k}))" {{']
        for r, level in enumerate(self.levels):
            lines.append(f"  subgraph cluster_rank_{r} {{")
            lines.append(f'    label="rank {r}"; rank=same;')
            for i in level:
                sup = support_to_bitstring(self.elements[i].support, self.n_bits)
                lines.append(f'    e{i} [label="{sup}"];')
            lines.append("  }")
        for lo, hi in self.covers:
            lines.append(f"  e{lo} -- e{hi};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _transitive_reduction(supports: list[int]) -> list[tuple[int, int]]:
    """Cover pairs (lo, hi) of the containment order on distinct masks."""
    below = []
    for j, sj in enumerate(supports):
        below.append([i for i, si in enumerate(supports) if si != sj and si & ~sj == 0])
    covers = []
    for j, cand in enumerate(below):
        for i in cand:
            si = supports[i]
            if not any(
                si & ~supports[m] == 0 and supports[m] != si for m in cand if m != i
            ):
                covers.append((i, j))
    covers.sort()
    return covers


def build_lattice(spec: ArrangementSpec) -> Lattice:
    """Enumerate all closed supports by breadth-first closure expansion.

    Start from closure of the empty support; repeatedly add one absent
    circuit to a known element's support and close.  Monotonicity of the
    closure operator makes this reach every closed support.  Covers come
    from transitive reduction of containment, not from rank arithmetic.
    """
    spec.require_generic()
    n_bits = spec.num_circuits
    if n_bits > MAX_SUPPORT_BITS:
        raise ScaleGuardError(
            f"{n_bits} circuits exceed the {MAX_SUPPORT_BITS}-bit support cap"
        )
    normals = circuit_normals(spec)

    found: dict[int, int] = {}
    start, start_rank = _close(spec, 0)
    found[start] = start_rank
    frontier = [start]
    while frontier:
        next_frontier = []
        for f in frontier:
            for i in range(n_bits):
                if f >> i & 1:
                    continue
                g, g_rank = _close(spec, f | 1 << i)
                if g not in found:
                    found[g] = g_rank
                    next_frontier.append(g)
                    if len(found) > MAX_ELEMENTS:
                        raise ScaleGuardError(
                            f"lattice exceeds {MAX_ELEMENTS} elements"
                        )
        frontier = next_frontier

    order = sorted(found, key=lambda f: (found[f], support_to_bitstring(f, n_bits)))
    elements = []
    for f in order:
        span = _EchelonSpan(
            [normals[i] for i in range(n_bits) if f >> i & 1], spec.n
        )
        basis = RationalMatrix.from_rows(
            [[Fraction(x) for x in row] for row in span.pivots]
        ) if span.pivots else RationalMatrix(0, spec.n, ())
        elements.append(LatticeElement(support=f, rank=found[f], basis=basis))

    covers = _transitive_reduction([e.support for e in elements])
    max_rank = max(e.rank for e in elements)
    levels = tuple(
        tuple(i for i, e in enumerate(elements) if e.rank == r)
        for r in range(max_rank + 1)
    )
    return Lattice(
        spec=spec,
        n_bits=n_bits,
        elements=tuple(elements),
        covers=tuple(covers),
        levels=levels,
    )
