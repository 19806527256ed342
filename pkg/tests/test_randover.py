"""Overlap law of two random r-subsets, Poisson comparison, sampling."""

from __future__ import annotations

from fractions import Fraction
from math import comb, isclose

import mpmath as mp
import numpy as np
import pytest
from scipy import stats

from discarr.randover import (
    MODEL_NOTE,
    ExperimentConfig,
    concentration_check,
    floor_power,
    hypergeom_pmf,
    prob_disjoint,
    sample_overlaps,
    threshold_sweep,
    tv_distance,
)
from oracles import overlap_counts


# ------------------------------------------------------------- exact law


def test_pmf_matches_pair_enumeration_oracle():
    n, r = 10, 2
    counts = overlap_counts(n, r)
    total = comb(n, r) ** 2
    for t in range(r + 1):
        assert hypergeom_pmf(n, r, t) == Fraction(counts.get(t, 0), total)
    assert hypergeom_pmf(n, r, 0) == Fraction(28, 45)


def test_pmf_small_cases_oracle():
    for n, r in ((6, 2), (7, 3), (8, 4), (9, 1)):
        counts = overlap_counts(n, r)
        total = comb(n, r) ** 2
        for t in range(r + 1):
            assert hypergeom_pmf(n, r, t) == Fraction(counts.get(t, 0), total)


def test_pmf_normalizes_exactly():
    for n in (1, 2, 10, 97, 1000):
        for r in (0, 1, 2, 5, min(n, 50)):
            if r > n:
                continue
            assert sum(hypergeom_pmf(n, r, t) for t in range(r + 1)) == 1


def test_pmf_zero_outside_support():
    # with r=6 from n=8, the two sets must share at least 4 elements
    assert hypergeom_pmf(8, 6, 3) == 0
    assert hypergeom_pmf(8, 6, 4) > 0


def test_disjoint_probability_record():
    rec = prob_disjoint(100, 5)
    assert rec.probability == hypergeom_pmf(100, 5, 0)
    assert rec.log_approx == Fraction(-25, 100)
    # log p is close to -r^2/N in the sparse regime
    assert isclose(
        float(rec.abs_log_error),
        abs(float(rec.log_probability) - float(rec.log_approx)),
        rel_tol=1e-9,
    )
    assert rec.abs_log_error < 0.02


def test_disjoint_edge_cases():
    assert prob_disjoint(50, 0).probability == 1
    rec = prob_disjoint(8, 5)  # 2r > N forces an intersection
    assert rec.probability == 0
    assert rec.log_probability is None and rec.abs_log_error is None


def test_disjoint_probability_decreases_in_r():
    vals = [prob_disjoint(200, r).probability for r in range(0, 12)]
    assert all(a > b for a, b in zip(vals, vals[1:]))


# ----------------------------------------------------- total variation


def tv_reference(n, r, dps=80):
    """Straight reimplementation: half the l1 gap against Poisson(r^2/n)."""
    with mp.workdps(dps):
        lam = mp.mpf(r) ** 2 / n
        head = mp.mpf(0)
        pois_mass = mp.mpf(0)
        for t in range(r + 1):
            hyper = mp.mpf(hypergeom_pmf(n, r, t).numerator) / hypergeom_pmf(
                n, r, t
            ).denominator if hypergeom_pmf(n, r, t) else mp.mpf(0)
            pois = mp.e ** (-lam) * lam**t / mp.factorial(t)
            head += abs(hyper - pois)
            pois_mass += pois
        return float((head + (1 - pois_mass)) / 2)


@pytest.mark.parametrize("n,r", [(50, 4), (100, 6), (300, 9), (64, 1)])
def test_tv_matches_reference(n, r):
    rec = tv_distance(n, r)
    assert isclose(float(rec.tv), tv_reference(n, r), rel_tol=1e-10)
    assert isclose(
        float(rec.ratio_tv_n2_r3), float(rec.tv) * n**2 / r**3, rel_tol=1e-12
    )


def test_tv_zero_cases():
    rec = tv_distance(100, 0)
    assert float(rec.tv) == 0.0 and float(rec.ratio_tv_n2_r3) == 0.0


def test_tv_decreases_along_fixed_exponent():
    # r ~ N^0.4 keeps r^3/N^2 shrinking, so the tv gap must shrink too
    vals = [float(tv_distance(n, round(n**0.4)).tv) for n in (100, 400, 1600, 6400)]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_tv_is_positive_when_laws_differ():
    assert float(tv_distance(30, 3).tv) > 0


# ------------------------------------------------------------- sampling


def test_sampling_is_deterministic():
    cfg = ExperimentConfig(60, 8, trials=400, seed=3)
    a = sample_overlaps(cfg)
    b = sample_overlaps(cfg)
    assert np.array_equal(a.t_values, b.t_values)
    assert np.array_equal(a.d_values, b.d_values)
    c = sample_overlaps(ExperimentConfig(60, 8, trials=400, seed=4))
    assert not np.array_equal(a.t_values, c.t_values)


def test_sampling_identity_and_bookkeeping():
    cfg = ExperimentConfig(60, 8, trials=500, seed=3)
    res = sample_overlaps(cfg)
    assert res.identity_ok
    assert np.array_equal(res.d_values, 2 * cfg.r - 2 * res.t_values)
    assert res.counts == tuple(np.bincount(res.t_values, minlength=cfg.r + 1))
    assert sum(res.empirical_pmf) == 1
    assert res.empirical_p_intersect == 1 - res.empirical_pmf[0]
    assert res.exact_p_intersect == 1 - hypergeom_pmf(60, 8, 0)
    assert res.exact_mean_distance == 2 * 8 - Fraction(2 * 64, 60)
    assert res.model_note == MODEL_NOTE
    assert "uniform r-subsets" in MODEL_NOTE


def test_sampling_edge_r_zero_and_r_full():
    res0 = sample_overlaps(ExperimentConfig(10, 0, trials=50, seed=1))
    assert res0.t_values.max() == 0 and res0.identity_ok
    resf = sample_overlaps(ExperimentConfig(7, 7, trials=50, seed=1))
    assert resf.t_values.min() == 7  # both sets are forced to everything
    assert resf.d_values.max() == 0


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(10, 11, trials=5, seed=0)
    with pytest.raises(ValueError):
        ExperimentConfig(10, 2, trials=0, seed=0)


def test_sampled_law_fits_exact_law_chi_square():
    # goodness of fit at the 1 percent level; seed is fixed so this is a
    # regression check, not a flaky statistical gamble
    n, r, trials = 60, 8, 20000
    res = sample_overlaps(ExperimentConfig(n, r, trials=trials, seed=12))
    expected = [float(hypergeom_pmf(n, r, t)) * trials for t in range(r + 1)]
    observed = list(res.counts)
    # merge sparse tail cells so every expected count is at least 5
    while len(expected) > 1 and expected[-1] < 5:
        expected[-2] += expected[-1]
        observed[-2] += observed[-1]
        expected.pop()
        observed.pop()
    stat, p = stats.chisquare(observed, f_exp=np.array(expected) * (sum(observed) / sum(expected)))
    assert p > 0.01


def test_sampled_mean_tracks_exact_mean():
    n, r, trials = 500, 22, 20000
    res = sample_overlaps(ExperimentConfig(n, r, trials=trials, seed=5))
    exact = float(res.exact_mean_distance)
    emp = float(res.empirical_mean_distance)
    # crude 5 sigma band on the mean of a bounded variable
    assert abs(emp - exact) < 5 * (2 * r) / (4 * trials**0.5)


# ------------------------------------------------------------ thresholds


def test_floor_power_values():
    assert floor_power(10**4, "0.5") == 100
    assert floor_power(10**4, "0.3") == 15
    assert floor_power(10**4, "0.75") == 1000  # exact powers must not round down
    assert floor_power(1024, "0.5") == 32
    assert floor_power(10, "0.5") == 3


def test_threshold_sweep_rows():
    rows = threshold_sweep(100, ["0.3", "0.5", "0.7"], trials=3000, seed=9)
    assert [r.exponent for r in rows] == ["0.3", "0.5", "0.7"]
    assert [r.r for r in rows] == [floor_power(100, e) for e in ("0.3", "0.5", "0.7")]
    exact = [r.exact_intersect for r in rows]
    assert exact == sorted(exact)  # larger r means more likely to intersect
    for row in rows:
        assert row.exact_intersect == 1 - hypergeom_pmf(100, row.r, 0)
        p = float(row.empirical_intersect)
        se_expected = (p * (1 - p) / 3000) ** 0.5
        assert isclose(row.stderr, se_expected, rel_tol=1e-12)
        band = 4 * row.stderr + 1e-9
        assert abs(float(row.empirical_intersect - row.exact_intersect)) <= band


def test_threshold_sweep_is_deterministic_per_position():
    rows_a = threshold_sweep(100, ["0.3", "0.5"], trials=500, seed=9)
    rows_b = threshold_sweep(100, ["0.3", "0.5"], trials=500, seed=9)
    assert [(r.exponent, r.empirical_intersect) for r in rows_a] == [
        (r.exponent, r.empirical_intersect) for r in rows_b
    ]
    # per-row substreams: swapping row order changes draws, not exact values
    rows_c = threshold_sweep(100, ["0.5", "0.3"], trials=500, seed=9)
    assert rows_c[0].exact_intersect == rows_a[1].exact_intersect


# --------------------------------------------------------- concentration


def test_concentration_report():
    rep = concentration_check(1000, 3, trials=400, seed=1)
    assert rep.exact_p_max == prob_disjoint(1000, 3).probability
    assert rep.gap == abs(rep.exact_p_max - rep.empirical_p_max)
    assert rep.identity_ok
    assert rep.concentrated == (rep.exact_p_max >= Fraction(99, 100))
    assert rep.concentrated
