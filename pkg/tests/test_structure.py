"""Tests for threshold structure and Delta V monotonicity."""

import numpy as np
import pytest

from via_scheduler.model import State, SystemParams, enumerate_states, state_index
from via_scheduler.policies import Greedy
from via_scheduler.solver import delta_v_profile, relative_value_iteration, threshold_report


def solve(p, q, beta, p_s=0.5):
    return relative_value_iteration(SystemParams(p=p, q=q, beta=beta, p_s=p_s))


@pytest.fixture(scope="module")
def fig2_solution():
    return solve(0.4, 0.7, 0.2)


class TestThresholdReport:
    def test_optimal_policy_is_threshold(self, fig2_solution):
        report = threshold_report(fig2_solution.policy, fig2_solution.params)
        assert report.ok
        assert report.idle_when_empty
        assert report.idle_when_fresh

    def test_thresholds_cover_every_pair(self, fig2_solution):
        report = threshold_report(fig2_solution.policy, fig2_solution.params)
        assert len(report.thresholds) == 22
        for x in (0, 1):
            assert report.threshold(0, x) is None
        # a full battery must transmit somewhere
        assert report.threshold(10, 0) is not None

    def test_greedy_table_violates_fresh_rule(self):
        params = SystemParams(p=0.4, q=0.7, beta=0.2, p_s=0.5)
        table = Greedy().transmit_probabilities(params).astype(np.int8)
        report = threshold_report(table, params)
        assert not report.idle_when_fresh
        assert report.idle_when_empty
        assert {v.rule for v in report.violations} == {"idle-when-fresh"}
        assert len(report.violations) == 20

    def test_corrupted_grid_lists_states(self, fig2_solution):
        params = fig2_solution.params
        policy = fig2_solution.policy.copy()
        target = State(10, 0, params.delta_max)
        policy[state_index(target, params)] = 0
        report = threshold_report(policy, params)
        assert not report.ok
        assert any(v.rule == "delta-monotone" and v.state == target for v in report.violations)

    def test_empty_battery_transmit(self, fig2_solution):
        params = fig2_solution.params
        policy = fig2_solution.policy.copy()
        policy[state_index(State(0, 1, 5), params)] = 1
        report = threshold_report(policy, params)
        assert not report.idle_when_empty
        assert report.violations[0].to_dict() == {"rule": "idle-when-empty", "state": [0, 1, 5], "detail": ""}

    def test_battery_monotone_violation(self):
        params = SystemParams(p=0.4, q=0.7, beta=0.2, p_s=0.5, e_max=2, delta_max=2)
        policy = np.zeros(params.num_states, dtype=np.int8)
        policy[state_index(State(1, 0, 2), params)] = 1
        report = threshold_report(policy, params)
        assert [v.rule for v in report.violations] == ["battery-monotone"]
        assert report.violations[0].state == State(2, 0, 2)

    @pytest.mark.parametrize(
        "p, q, beta, p_s",
        [
            (0.4, 0.7, 0.2, 0.1),
            (0.7, 0.4, 0.4, 0.5),
            (0.5, 0.6, 0.5, 0.9),
            (0.5, 0.6, 0.8, 0.5),
        ],
    )
    def test_grid_points(self, p, q, beta, p_s):
        solution = solve(p, q, beta, p_s)
        assert threshold_report(solution.policy, solution.params).ok


class TestThresholdAsymmetry:
    @pytest.mark.parametrize("beta", [0.2, 0.4])
    def test_lower_threshold_for_likelier_state(self, beta):
        slow_up = threshold_report(solve(0.4, 0.7, beta).policy, SystemParams(p=0.4, q=0.7, beta=beta, p_s=0.5))
        fast_up = threshold_report(solve(0.7, 0.4, beta).policy, SystemParams(p=0.7, q=0.4, beta=beta, p_s=0.5))
        for e in range(1, 11):
            a, b = slow_up.threshold(e, 0), slow_up.threshold(e, 1)
            if a is not None and b is not None:
                assert a <= b, e
            a, b = fast_up.threshold(e, 0), fast_up.threshold(e, 1)
            if a is not None and b is not None:
                assert a >= b, e

    def test_more_energy_lowers_thresholds(self, fig2_solution):
        low = threshold_report(fig2_solution.policy, fig2_solution.params)
        high_solution = solve(0.4, 0.7, 0.4)
        high = threshold_report(high_solution.policy, high_solution.params)
        for key, threshold in low.thresholds.items():
            if threshold is not None:
                assert high.thresholds[key] is not None
                assert high.thresholds[key] <= threshold, key


class TestDeltaVProfile:
    def test_empty_battery_is_zero(self, fig2_solution):
        profile = delta_v_profile(fig2_solution.v, fig2_solution.params)
        for s in enumerate_states(fig2_solution.params):
            if s.e == 0:
                assert profile.at(s) == 0.0

    def test_monotone_at_fig2_params(self, fig2_solution):
        profile = delta_v_profile(fig2_solution.v, fig2_solution.params)
        assert profile.flags == []
        assert len(profile.monotone) == 22

    def test_sign_matches_policy(self, fig2_solution):
        params = fig2_solution.params
        profile = delta_v_profile(fig2_solution.v, params)
        for s in enumerate_states(params):
            if fig2_solution.action(s) == 1:
                assert profile.at(s) < 0

    def test_flags_increasing_gap(self):
        params = SystemParams(p=0.4, q=0.7, beta=0.2, p_s=0.5, e_max=1, delta_max=4)
        # values rewarding high delta make Delta V increase in delta
        v = np.array([-10.0 * s.delta ** 2 for s in enumerate_states(params)])
        profile = delta_v_profile(v, params)
        assert (1, 0) in profile.flags or (1, 1) in profile.flags

    def test_threshold_matches_gap_sign(self, fig2_solution):
        params = fig2_solution.params
        report = threshold_report(fig2_solution.policy, params)
        profile = delta_v_profile(fig2_solution.v, params)
        for (e, x), threshold in report.thresholds.items():
            if threshold is None:
                continue
            assert profile.at(State(e, x, threshold)) < 0
            if threshold >= 2:
                assert profile.at(State(e, x, threshold - 1)) >= -1e-12

    @pytest.mark.parametrize("p, q", [(0.4, 0.7), (0.7, 0.4), (0.5, 0.6)])
    @pytest.mark.parametrize("p_s", [0.1, 0.9])
    def test_monotone_across_grid(self, p, q, p_s):
        solution = solve(p, q, 0.4, p_s)
        assert delta_v_profile(solution.v, solution.params).flags == []
