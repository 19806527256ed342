"""Random r-subset overlaps: exact laws, Poisson comparison, experiments.

Two independent uniform r-subsets F, G of an N-element circuit index set
have overlap T = |F intersect G| distributed hypergeometrically with
parameters (N, r, r); the distance between the corresponding hypercube
points is d = 2r - 2T.  Everything exact is kept as Fraction; only the
Poisson side of the total-variation comparison needs transcendentals and
runs at 60 decimal digits of working precision.

Sampling model note: F and G are uniform r-subsets of ALL N circuit
indices.  Such subsets are generally not closed supports of any
arrangement; the experiments quantify the overlap law itself, not the
geometry of a particular lattice.  Reports carry this note verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np
from mpmath import mp

from . import kernels

MODEL_NOTE = (
    "model: F, G are uniform r-subsets of all N circuit indices, "
    "not constrained to closed supports"
)

#: Working precision (decimal digits) for the Poisson side of tv_distance.
TV_WORKING_DPS = 60


def hypergeom_pmf(n_total: int, r: int, t: int) -> Fraction:
    """Exact P(|F intersect G| = t) for independent uniform r-subsets."""
    if not 0 <= t <= r <= n_total:
        raise ValueError(f"need 0 <= t <= r <= N, got t={t}, r={r}, N={n_total}")
    return Fraction(comb(r, t) * comb(n_total - r, r - t), comb(n_total, r))


@dataclass(frozen=True)
class OverlapLaw:
    """Exact overlap distribution: pmf[t] = P(T = t) for t in [0, r]."""

    n_total: int
    r: int
    pmf: tuple[Fraction, ...]

    @classmethod
    def compute(cls, n_total: int, r: int) -> "OverlapLaw":
        return cls(
            n_total=n_total,
            r=r,
            pmf=tuple(hypergeom_pmf(n_total, r, t) for t in range(r + 1)),
        )

    @property
    def mean(self) -> Fraction:
        # E[T] = r^2/N: each of F's r members lands in G with chance r/N
        return Fraction(self.r * self.r, self.n_total)


@dataclass(frozen=True)
class DisjointRecord:
    """Exact P(F intersect G = empty) with its log-scale diagnostics.

    log_probability and abs_log_error are None when the probability is 0
    (r > N/2) and exact zeros when r = 0.
    """

    n_total: int
    r: int
    probability: Fraction
    log_approx: Fraction
    log_probability: object
    abs_log_error: object


def prob_disjoint(n_total: int, r: int) -> DisjointRecord:
    """P(T = 0) = C(N-r, r)/C(N, r), with the -r^2/N log comparison."""
    if not 0 <= r <= n_total:
        raise ValueError(f"need 0 <= r <= N, got r={r}, N={n_total}")
    if 2 * r > n_total:
        p = Fraction(0)
    else:
        p = Fraction(comb(n_total - r, r), comb(n_total, r))
    approx = Fraction(-r * r, n_total) if n_total else Fraction(0)
    if p == 0:
        return DisjointRecord(n_total, r, p, approx, None, None)
    with mp.workdps(TV_WORKING_DPS):
        logp = mp.log(mp.mpf(p.numerator)) - mp.log(mp.mpf(p.denominator))
        err = abs(logp - mp.mpf(approx.numerator) / approx.denominator)
    return DisjointRecord(n_total, r, p, approx, logp, err)


@dataclass(frozen=True)
class TVRecord:
    """Total variation between the exact overlap law and Poisson(r^2/N)."""

    n_total: int
    r: int
    tv: object
    ratio_tv_n2_r3: object


def tv_distance(n_total: int, r: int) -> TVRecord:
    """(1/2) sum_t |hyper(t) - poisson(t)| over t <= r, plus half the
    Poisson tail mass beyond r (the Poisson law lives on all of N; a
    truncated comparison would bias the bound check)."""
    if not 0 <= r <= n_total:
        raise ValueError(f"need 0 <= r <= N, got r={r}, N={n_total}")
    with mp.workdps(TV_WORKING_DPS):
        lam = mp.mpf(r * r) / n_total if n_total else mp.mpf(0)
        acc = mp.mpf(0)
        head = mp.mpf(0)
        e_neg = mp.e ** (-lam)
        pois_t = e_neg  # lambda^0 / 0!
        for t in range(r + 1):
            hyper = hypergeom_pmf(n_total, r, t)
            h = mp.mpf(hyper.numerator) / hyper.denominator
            acc += abs(h - pois_t)
            head += pois_t
            pois_t = pois_t * lam / (t + 1)
        tail = 1 - head
        if tail < 0:  # rounding guard; exact tail is nonnegative
            tail = mp.mpf(0)
        tv = (acc + tail) / 2
        ratio = tv * n_total * n_total / r**3 if r else mp.mpf(0)
    return TVRecord(n_total=n_total, r=r, tv=tv, ratio_tv_n2_r3=ratio)


@dataclass(frozen=True)
class ExperimentConfig:
    n_total: int
    r: int
    trials: int
    seed: int

    def __post_init__(self):
        if not 0 <= self.r <= self.n_total:
            raise ValueError(
                f"need 0 <= r <= N, got r={self.r}, N={self.n_total}"
            )
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


@dataclass(frozen=True)
class ExperimentResult:
    """Seeded overlap experiment with exact references alongside.

    t_values[i] and d_values[i] are the overlap and symmetric-difference
    sizes of trial i; d is computed from the sampled subsets directly, so
    identity_ok reports whether d = 2r - 2T held exactly on every trial.
    """

    config: ExperimentConfig
    t_values: np.ndarray = field(repr=False)
    d_values: np.ndarray = field(repr=False)
    counts: tuple[int, ...]
    empirical_pmf: tuple[Fraction, ...]
    empirical_p_intersect: Fraction
    empirical_mean_distance: Fraction
    exact_law: OverlapLaw
    exact_p_intersect: Fraction
    exact_mean_distance: Fraction
    identity_ok: bool
    model_note: str = MODEL_NOTE


def sample_overlaps(cfg: ExperimentConfig) -> ExperimentResult:
    """Run the seeded experiment; deterministic in the full config."""
    t_values, d_values = kernels.sample_overlaps(
        cfg.n_total, cfg.r, cfg.trials, cfg.seed
    )
    counts = np.bincount(t_values, minlength=cfg.r + 1)
    law = OverlapLaw.compute(cfg.n_total, cfg.r)
    exact_p_zero = law.pmf[0]
    identity_ok = bool(np.all(d_values == 2 * cfg.r - 2 * t_values))
    return ExperimentResult(
        config=cfg,
        t_values=t_values,
        d_values=d_values,
        counts=tuple(int(c) for c in counts),
        empirical_pmf=tuple(Fraction(int(c), cfg.trials) for c in counts),
        empirical_p_intersect=Fraction(
            int(np.count_nonzero(t_values)), cfg.trials
        ),
        empirical_mean_distance=Fraction(int(d_values.sum()), cfg.trials),
        exact_law=law,
        exact_p_intersect=1 - exact_p_zero,
        exact_mean_distance=2 * cfg.r - 2 * law.mean,
        identity_ok=identity_ok,
    )


def floor_power(n_total: int, exponent: str) -> int:
    """floor(N^e) computed at high precision with a tiny upward nudge so
    that exactly-integer powers are not pulled down by representation
    error (e.g. 10000^0.5 must give 100)."""
    with mp.workdps(50):
        v = mp.power(n_total, mp.mpf(exponent))
        return int(mp.floor(v + mp.mpf("1e-30")))


@dataclass(frozen=True)
class ThresholdRow:
    exponent: str
    r: int
    exact_intersect: Fraction
    empirical_intersect: Fraction
    stderr: float


def threshold_sweep(
    n_total: int, exponents, trials: int, seed: int
) -> list[ThresholdRow]:
    """Exact and empirical P(F intersect G nonempty) at r = floor(N^e).

    Each row draws its trials from an independent substream derived from
    the base seed, so rows are reproducible regardless of sweep order.
    """
    from .rng import SplitMix64

    seeder = SplitMix64(seed)
    rows = []
    for e in exponents:
        e_str = str(e)
        r = floor_power(n_total, e_str)
        row_seed = seeder.next64()
        exact = 1 - prob_disjoint(n_total, r).probability
        if r == 0:
            empirical = Fraction(0)
        else:
            t_values, _ = kernels.sample_overlaps(n_total, r, trials, row_seed)
            empirical = Fraction(int(np.count_nonzero(t_values)), trials)
        p = float(empirical)
        stderr = (p * (1 - p) / trials) ** 0.5
        rows.append(
            ThresholdRow(
                exponent=e_str,
                r=r,
                exact_intersect=exact,
                empirical_intersect=empirical,
                stderr=stderr,
            )
        )
    return rows


@dataclass(frozen=True)
class ConcentrationReport:
    """How often the sampled distance hits its maximum 2r."""

    n_total: int
    r: int
    trials: int
    exact_p_max: Fraction
    empirical_p_max: Fraction
    gap: Fraction
    concentrated: bool
    identity_ok: bool
    model_note: str = MODEL_NOTE


def concentration_check(
    n_total: int, r: int, trials: int, seed: int
) -> ConcentrationReport:
    """Exact P(d = 2r) = P(T = 0) against the empirical frequency; the
    concentrated flag marks the exact value reaching 0.99."""
    exact = prob_disjoint(n_total, r).probability
    t_values, d_values = kernels.sample_overlaps(n_total, r, trials, seed)
    empirical = Fraction(int(np.count_nonzero(d_values == 2 * r)), trials)
    identity_ok = bool(np.all(d_values == 2 * r - 2 * t_values))
    gap = abs(empirical - exact)
    return ConcentrationReport(
        n_total=n_total,
        r=r,
        trials=trials,
        exact_p_max=exact,
        empirical_p_max=empirical,
        gap=gap,
        concentrated=exact >= Fraction(99, 100),
        identity_ok=identity_ok,
    )
