"""Exact rational linear algebra and discriminantal hyperplane normals.

A base arrangement is n hyperplanes in R^k given by an n x k matrix of
rational normal vectors.  "Generic" means certified generic: every k x k
minor of that matrix is nonzero, checked exactly.  From a certified base
arrangement, each (k+1)-subset of hyperplanes (a circuit) yields one
hyperplane in the n-dimensional space of parallel translates; its normal
vector is computed by cofactor expansion and is supported exactly on the
circuit.

All arithmetic is exact over Q.  Rationals are `fractions.Fraction`
(always lowest terms, positive denominator); rank and determinants use
fraction-free Bareiss elimination on integer-rescaled rows so that
intermediate entries stay bounded.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm

from .errors import GenericityError
from .rng import SplitMix64

#: Magnitude bound for randomly generated integer normal entries.
NORMAL_ENTRY_BOUND = 10**4

#: Resampling budget for generate_generic_normals.
MAX_RESAMPLE_ROUNDS = 1000

Rational = Fraction


def rational_to_string(q: Fraction) -> str:
    """Format as "p/q", omitting the denominator when it is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_from_string(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable row-major matrix of exact rationals."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"need {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows) -> "RationalMatrix":
        rows = [tuple(Fraction(x) for x in r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_list(self) -> list[tuple[Fraction, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def submatrix(self, row_idx, col_idx) -> "RationalMatrix":
        ents = tuple(self.at(i, j) for i in row_idx for j in col_idx)
        return RationalMatrix(len(tuple(row_idx)), len(tuple(col_idx)), ents)


def _integer_rows(rows) -> list[list[int]]:
    """Rescale each rational row by the lcm of its denominators.

    Row scaling by a positive rational preserves rank and row space, so
    rank / span questions can be answered on the integer rows.
    """
    out = []
    for r in rows:
        r = [Fraction(x) for x in r]
        scale = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * scale) for x in r])
    return out


def _bareiss_echelon(a: list[list[int]]) -> int:
    """In-place fraction-free elimination; returns the rank.

    One-step Bareiss: every division is exact, and every intermediate
    entry is a minor of the original matrix, which bounds entry growth.
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            aic = a[i][c]
            arc = a[r][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c + 1, ncols):
                row_i[j] = (row_i[j] * arc - aic * row_r[j]) // prev
            row_i[c] = 0
        prev = a[r][c]
        r += 1
        if r == nrows:
            break
    return r


def rank(m: RationalMatrix) -> int:
    """Exact rank via fraction-free Gaussian elimination."""
    a = _integer_rows(m.row_list())
    if not a or not a[0]:
        return 0
    return _bareiss_echelon(a)


def rank_of_rows(rows) -> int:
    """Rank of a list of rational row vectors."""
    a = _integer_rows(rows)
    if not a or not a[0]:
        return 0
    return _bareiss_echelon(a)


def det(m: RationalMatrix) -> Fraction:
    """Exact determinant of a square matrix (Bareiss with scale tracking)."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    a = []
    for i in range(n):
        r = list(m.row(i))
        s = lcm(*(x.denominator for x in r))
        scale *= s
        a.append([int(x * s) for x in r])
    sign = 1
    prev = 1
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        for i in range(c + 1, n):
            aic = a[i][c]
            acc = a[c][c]
            for j in range(c + 1, n):
                a[i][j] = (a[i][j] * acc - aic * a[c][j]) // prev
            a[i][c] = 0
        prev = a[c][c]
    return Fraction(sign * a[n - 1][n - 1], 1) / scale


def in_span(v, basis_rows: RationalMatrix) -> bool:
    """Exact test: does v lie in the row space of basis_rows?"""
    v = tuple(Fraction(x) for x in v)
    if basis_rows.rows and len(v) != basis_rows.cols:
        raise ValueError("vector length does not match basis width")
    rows = basis_rows.row_list()
    base_rank = rank_of_rows(rows)
    return rank_of_rows(rows + [v]) == base_rank


class _EchelonSpan:
    """Row space of a set of rational vectors, held as integer echelon rows.

    Built once, then queried many times: `contains` runs one fraction-free
    elimination of the candidate against the stored pivot rows.
    """

    __slots__ = ("ncols", "pivots")

    def __init__(self, rows, ncols: int):
        self.ncols = ncols
        a = _integer_rows(rows)
        if a:
            r = _bareiss_echelon(a)
            self.pivots = [row for row in a[:r]]
        else:
            self.pivots = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def contains(self, v) -> bool:
        vi = _integer_rows([v])[0]
        if not any(vi):
            return True
        a = [row[:] for row in self.pivots]
        a.append(vi)
        return _bareiss_echelon(a) == len(self.pivots)


@dataclass(frozen=True)
class ArrangementSpec:
    """Base arrangement: n hyperplane normals in R^k plus the seed that made them."""

    n: int
    k: int
    normals: RationalMatrix
    seed: int

    def __post_init__(self):
        if not self.n >= self.k + 1 >= 2:
            raise ValueError(f"need n >= k+1 >= 2, got n={self.n}, k={self.k}")
        if (self.normals.rows, self.normals.cols) != (self.n, self.k):
            raise ValueError("normals must be an n x k matrix")

    @classmethod
    def generate(cls, n: int, k: int, seed: int) -> "ArrangementSpec":
        return cls(n=n, k=k, normals=generate_generic_normals(n, k, seed), seed=seed)

    @property
    def num_circuits(self) -> int:
        return comb(self.n, self.k + 1)

    def is_generic(self) -> bool:
        return _is_generic(self)

    def require_generic(self) -> None:
        if not self.is_generic():
            raise GenericityError(
                f"base arrangement (n={self.n}, k={self.k}) has a vanishing "
                f"{self.k}x{self.k} minor; genericity certificate failed"
            )

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "seed": self.seed,
            "normals": [
                [rational_to_string(x) for x in self.normals.row(i)]
                for i in range(self.n)
            ],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "ArrangementSpec":
        normals = RationalMatrix.from_rows(
            [[rational_from_string(x) for x in row] for row in d["normals"]]
        )
        return cls(n=int(d["n"]), k=int(d["k"]), normals=normals, seed=int(d["seed"]))


@functools.lru_cache(maxsize=None)
def _is_generic(spec: ArrangementSpec) -> bool:
    rows = spec.normals.row_list()
    for subset in combinations(range(spec.n), spec.k):
        sq = RationalMatrix.from_rows([rows[i] for i in subset])
        if det(sq) == 0:
            return False
    return True


def generate_generic_normals(n: int, k: int, seed: int) -> RationalMatrix:
    """Draw an n x k integer matrix with every k x k minor nonzero.

    Rows are drawn one at a time with entries uniform in
    [-NORMAL_ENTRY_BOUND, NORMAL_ENTRY_BOUND]; a row is rejected and
    redrawn if it completes any vanishing k x k minor with the rows
    already placed.  Deterministic in (n, k, seed).
    """
    if not n >= k + 1 >= 2:
        raise ValueError(f"need n >= k+1 >= 2, got n={n}, k={k}")
    rng = SplitMix64(seed)
    rows: list[list[Fraction]] = []
    rounds = 0
    while len(rows) < n:
        candidate = [
            Fraction(rng.randint_symmetric(NORMAL_ENTRY_BOUND)) for _ in range(k)
        ]
        i = len(rows)
        ok = True
        if i >= k - 1:
            for prev in combinations(range(i), k - 1):
                sq = RationalMatrix.from_rows([rows[p] for p in prev] + [candidate])
                if det(sq) == 0:
                    ok = False
                    break
        if ok:
            rows.append(candidate)
        else:
            rounds += 1
            if rounds > MAX_RESAMPLE_ROUNDS:
                raise GenericityError(
                    f"no generic matrix after {MAX_RESAMPLE_ROUNDS} resampling rounds"
                )
    return RationalMatrix.from_rows(rows)


@dataclass(frozen=True)
class DiscriminantalNormal:
    """Normal vector in translate space of the hyperplane indexed by one circuit."""

    circuit: int  # bitmask over {0, ..., n-1}
    vector: tuple[Fraction, ...]


def discriminantal_normal(spec: ArrangementSpec, circuit: int) -> DiscriminantalNormal:
    """Normal of the translate-space hyperplane for one (k+1)-subset.

    With circuit elements e_0 < ... < e_k and A the (k+1) x k stack of the
    corresponding base normals, a translate tuple alpha lies on the
    hyperplane iff det[A | alpha_circuit] = 0.  Expanding that determinant
    along the alpha column puts (-1)^(j+k) * det(A minus row j) at
    coordinate e_j and zero elsewhere; genericity makes every such minor
    nonzero, so the vector's support is exactly the circuit.
    """
    spec.require_generic()
    elems = [i for i in range(spec.n) if circuit >> i & 1]
    if circuit >> spec.n or len(elems) != spec.k + 1:
        raise ValueError(f"circuit must be a (k+1)-subset of [n], got {bin(circuit)}")
    rows = [spec.normals.row(i) for i in elems]
    vec = [Fraction(0)] * spec.n
    for j, e in enumerate(elems):
        sq = RationalMatrix.from_rows(rows[:j] + rows[j + 1 :])
        cof = det(sq)
        vec[e] = cof if (j + spec.k) % 2 == 0 else -cof
    return DiscriminantalNormal(circuit=circuit, vector=tuple(vec))


@functools.lru_cache(maxsize=None)
def circuit_normals(spec: ArrangementSpec) -> tuple[tuple[Fraction, ...], ...]:
    """Normals of all circuit hyperplanes, indexed by colex circuit rank."""
    from .circuits import all_circuits

    return tuple(
        discriminantal_normal(spec, c).vector for c in all_circuits(spec.n, spec.k)
    )
