import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from promiscuity import gaussian
from promiscuity.contangle import SqueezingParams, separability_threshold
from promiscuity.four_mode import (
    build_state,
    full_inseparability_check,
    full_report,
    pair_ppt_separable,
)

squeezings = st.floats(min_value=0.0, max_value=2.5, allow_nan=False)


def test_build_state_basics():
    state = build_state(SqueezingParams(1.5, 1.0))
    assert state.n_modes == 4
    assert state.is_physical()
    assert state.is_pure()


def test_build_state_vacuum_limit():
    assert np.array_equal(build_state(SqueezingParams(0.0, 0.0)).data, np.eye(8))


def test_build_state_factorizes_without_middle_squeezer():
    # s = 0 leaves two independent two-mode squeezed pairs
    a = 0.9
    state = build_state(SqueezingParams(a, 0.0))
    pair = gaussian.apply(
        gaussian.two_mode_squeezer(0, 1, a, 2), gaussian.vacuum_cm(2)
    ).data
    expected = np.zeros((8, 8))
    for mi, mj in [(0, 1), (2, 3)]:
        block = [mi, mj, mi + 4, mj + 4]
        expected[np.ix_(block, block)] = pair
    assert np.allclose(state.data, expected, atol=1e-13)


def test_build_state_swap_symmetry():
    # simultaneous exchange 1 <-> 4, 2 <-> 3 leaves the state invariant
    state = build_state(SqueezingParams(1.1, 0.7))
    swapped = gaussian.permute_modes(state, [3, 2, 1, 0])
    assert np.allclose(state.data, swapped.data, atol=1e-12)


def test_pair_ppt_separable_follows_closed_rules():
    params = SqueezingParams(0.5, 1.0)
    state = build_state(params)
    assert not pair_ppt_separable(state, 1, 2)
    assert not pair_ppt_separable(state, 3, 4)
    for i, j in [(1, 3), (1, 4), (2, 4)]:
        assert pair_ppt_separable(state, i, j)
    # below threshold 0.788 the middle pair is still entangled
    assert not pair_ppt_separable(state, 2, 3)
    assert pair_ppt_separable(build_state(SqueezingParams(1.0, 1.0)), 2, 3)


def test_full_report_benchmark_numbers():
    report = full_report(SqueezingParams(1.5, 1.0))
    assert report.pairwise_contangle[(1, 2)] == 9.0
    assert report.pairwise_contangle[(3, 4)] == 9.0
    assert report.pairwise_contangle[(1, 3)] == 0.0
    assert report.pairwise_contangle[(2, 3)] == 0.0
    assert report.interpair_contangle == 4.0
    assert report.residual == pytest.approx(5.517686046189343, abs=1e-11)
    assert report.tripartite_bound == pytest.approx(0.4511305571890842, abs=1e-11)
    assert report.monogamy_ok and report.strong_monogamy_ok
    assert report.consistent
    assert not report.near_threshold
    assert report.max_route_deviation < 1e-9


def test_full_report_keys_are_one_based():
    report = full_report(SqueezingParams(0.3, 0.2))
    assert sorted(report.one_vs_rest_contangle) == [1, 2, 3, 4]
    assert sorted(report.pairwise_contangle) == [
        (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
    ]


def test_full_report_flags_threshold_neighborhood():
    s = 1.0
    thr = separability_threshold(s)
    assert full_report(SqueezingParams(thr + 1e-8, s)).near_threshold
    assert not full_report(SqueezingParams(thr + 0.1, s)).near_threshold


def test_full_report_consistency_across_regimes():
    for a, s in [(0.0, 0.0), (0.2, 1.8), (1.0, 1.0), (2.5, 2.5)]:
        report = full_report(SqueezingParams(a, s))
        assert report.consistent, (a, s)
        assert report.max_route_deviation <= 1e-7


def test_full_inseparability_truth_table():
    assert full_inseparability_check(SqueezingParams(1.0, 1.0))
    assert not full_inseparability_check(SqueezingParams(0.0, 1.0))
    assert not full_inseparability_check(SqueezingParams(1.0, 0.0))
    assert not full_inseparability_check(SqueezingParams(0.0, 0.0))


@given(a=squeezings, s=squeezings)
@settings(max_examples=40, deadline=None)
def test_reports_are_consistent_on_random_draws(a, s):
    report = full_report(SqueezingParams(a, s))
    assert report.consistent
    assert report.monogamy_ok
    assert report.strong_monogamy_ok


@given(a=st.floats(min_value=0.05, max_value=2.5, allow_nan=False),
       s=st.floats(min_value=0.05, max_value=2.5, allow_nan=False))
@settings(max_examples=30, deadline=None)
def test_positive_squeezing_gives_full_inseparability(a, s):
    assert full_inseparability_check(SqueezingParams(a, s))
