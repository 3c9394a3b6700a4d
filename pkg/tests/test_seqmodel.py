"""Weighted sequence-space projections and the two approximation bounds.

The hand-worked example below uses kappa = (1, 1/16, 1/81, 1/256) with
f = (1,1,1,1) and S = {0,1}: the excluded multiplier is eps = 1/9, the
standard right side is sqrt(337)/9 and the superconvergent right side is
sqrt(72354)/81.
"""

import math

import numpy as np
import pytest

from maternlab import (
    WeightedSeqSpace,
    analytic_weights,
    epsilon_excluded,
    run_trials,
    seq_native_norm_sq,
    seq_project,
    sobolev_weights,
    verify_standard_bound,
    verify_superconvergence,
)


def test_weight_presets():
    sob = sobolev_weights(8)
    assert sob.M == 8
    assert sob.kappa[0] == 1.0
    assert sob.kappa[3] == pytest.approx(4.0**-4)
    ana = analytic_weights(6)
    assert ana.kappa[0] == 0.5
    assert ana.kappa[5] == pytest.approx(2.0**-6)
    for space in (sob, ana):
        assert np.all(space.kappa > 0)
        assert np.all(np.diff(space.kappa) <= 0)


def test_space_validation():
    with pytest.raises(ValueError):
        WeightedSeqSpace(kappa=np.array([1.0, 0.0]))
    with pytest.raises(ValueError):
        WeightedSeqSpace(kappa=np.array([1.0, -2.0]))
    with pytest.raises(ValueError):
        WeightedSeqSpace(kappa=np.array([0.5, 1.0]))  # must not increase
    with pytest.raises(ValueError):
        WeightedSeqSpace(kappa=np.array([]))


def test_projection_zeroes_the_complement():
    space = sobolev_weights(6)
    f = np.arange(1.0, 7.0)
    p = seq_project(space, f, [0, 2, 4])
    assert np.allclose(p, [1, 0, 3, 0, 5, 0])
    mask = np.array([True, True, False, False, True, True])
    q = seq_project(space, f, mask)
    assert np.allclose(q, [1, 2, 0, 0, 5, 6])
    with pytest.raises(ValueError):
        seq_project(space, f, [7])  # index out of range
    with pytest.raises(ValueError):
        seq_project(space, np.ones(5), mask)  # length mismatch


def test_native_norm_hand_value():
    space = sobolev_weights(4)
    f = np.array([1.0, 1.0, 1.0, 1.0])
    # 1/1 + 16 + 81 + 256
    assert seq_native_norm_sq(space, f) == pytest.approx(354.0, rel=1e-14)


def test_epsilon_is_largest_excluded_root():
    space = sobolev_weights(4)
    assert epsilon_excluded(space, [0, 1]) == pytest.approx(1.0 / 9.0, rel=1e-14)
    assert epsilon_excluded(space, [1, 2, 3]) == 1.0  # mode 0 excluded
    assert epsilon_excluded(space, [0, 1, 2, 3]) == 0.0  # nothing excluded


def test_standard_bound_hand_example():
    space = sobolev_weights(4)
    f = np.ones(4)
    chk = verify_standard_bound(space, f, [0, 1])
    assert chk.lhs == pytest.approx(math.sqrt(2.0), rel=1e-14)
    assert chk.eps == pytest.approx(1.0 / 9.0, rel=1e-14)
    assert chk.rhs == pytest.approx(math.sqrt(337.0) / 9.0, rel=1e-14)
    assert chk.holds


def test_superconvergence_bound_hand_example():
    space = sobolev_weights(4)
    f = np.ones(4)
    chk = verify_superconvergence(space, f, [0, 1])
    assert chk.lhs == pytest.approx(math.sqrt(2.0), rel=1e-14)
    assert chk.rhs == pytest.approx(math.sqrt(72354.0) / 81.0, rel=1e-14)
    assert chk.holds


def test_both_bounds_hold_for_arbitrary_sequences():
    # the inequalities are identities of the weights, not of any model for
    # f, so heavy-tailed draws must pass as well
    rng = np.random.default_rng(112)
    for space in (sobolev_weights(32), analytic_weights(32)):
        for _ in range(200):
            f = rng.standard_cauchy(32)
            mask = rng.random(32) < rng.uniform(0.1, 0.9)
            std = verify_standard_bound(space, f, mask)
            sup = verify_superconvergence(space, f, mask)
            assert std.holds
            assert sup.holds


def test_unit_coordinate_case_is_sharp():
    # f = e_j with S excluding exactly j makes both bounds equalities
    for space in (sobolev_weights(16), analytic_weights(16)):
        for j in (0, 5, 15):
            f = np.zeros(16)
            f[j] = 1.0
            mask = np.ones(16, dtype=bool)
            mask[j] = False
            std = verify_standard_bound(space, f, mask)
            sup = verify_superconvergence(space, f, mask)
            assert std.lhs / std.rhs == pytest.approx(1.0, abs=1e-13)
            assert sup.lhs / sup.rhs == pytest.approx(1.0, abs=1e-13)


def test_full_subset_gives_zero_residual():
    space = sobolev_weights(8)
    f = np.arange(1.0, 9.0)
    chk = verify_standard_bound(space, f, np.ones(8, dtype=bool))
    assert chk.lhs == 0.0
    assert chk.eps == 0.0
    assert chk.holds


def test_run_trials_reports_and_is_deterministic():
    space = analytic_weights(64)
    rep1 = run_trials(space, 300, 42)
    rep2 = run_trials(space, 300, 42)
    assert rep1.trials == 300
    assert rep1.standard_passes == 300
    assert rep1.super_passes == 300
    assert rep1.counterexample is None
    assert rep1.all_pass
    assert rep1.extremal_ratio == pytest.approx(1.0, abs=1e-12)
    assert rep1.sharpest_standard == rep2.sharpest_standard
    assert rep1.sharpest_super == rep2.sharpest_super
    assert 0.0 < rep1.sharpest_standard <= 1.0 + 1e-12
    different = run_trials(space, 300, 43)
    assert different.sharpest_standard != rep1.sharpest_standard


def test_run_trials_edge_cases():
    space = sobolev_weights(16)
    empty = run_trials(space, 0, 42)
    assert empty.all_pass
    assert empty.trials == 0
    assert empty.extremal_ratio == 1.0
    with pytest.raises(ValueError):
        run_trials(space, -1, 42)
