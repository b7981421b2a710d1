"""Tests for relative value iteration."""

import numpy as np
import pytest

from via_scheduler.config import SolverConfig
from via_scheduler.evaluate import brute_force_optimal, exact_metrics
from via_scheduler.model import State, SystemParams, enumerate_states
from via_scheduler.policies import OptimalTable
from via_scheduler.solver import (
    ConvergenceError,
    action_values,
    bellman_residual,
    extract_policy,
    relative_value_iteration,
    state_costs,
)


@pytest.fixture(scope="module")
def fig2_solution():
    return relative_value_iteration(SystemParams(p=0.4, q=0.7, beta=0.2, p_s=0.5))


class TestRelativeValueIteration:
    def test_converges(self, fig2_solution):
        assert fig2_solution.converged
        assert fig2_solution.span_residual < 1e-9
        assert fig2_solution.iterations > 1
        assert 0.0 < fig2_solution.theta_star < 10.0

    def test_reference_normalized(self, fig2_solution):
        assert fig2_solution.value(State(0, 0, 0)) == 0.0

    def test_self_consistency(self, fig2_solution):
        params = fig2_solution.params
        exact = exact_metrics(OptimalTable(actions=fig2_solution.policy, params=params), params)
        assert abs(fig2_solution.theta_star - exact.avg_via) < 1e-8

    def test_bellman_residual(self, fig2_solution):
        assert bellman_residual(fig2_solution) < 1e-8

    def test_idle_rules(self, fig2_solution):
        for s in enumerate_states(fig2_solution.params):
            if s.e == 0 or s.delta == 0:
                assert fig2_solution.action(s) == 0, s

    def test_summary(self, fig2_solution):
        summary = fig2_solution.summary()
        assert summary["converged"] is True
        assert summary["reference"] == [0, 0, 0]
        assert summary["theta_star"] == fig2_solution.theta_star

    def test_nearly_frozen_source(self):
        params = SystemParams(p=1e-6, q=1e-6, beta=0.5, p_s=0.5, e_max=2, delta_max=2)
        assert relative_value_iteration(params).theta_star <= 1e-3

    def test_dead_channel(self):
        params = SystemParams(p=0.5, q=0.5, beta=0.3, p_s=0.0, e_max=3, delta_max=4)
        solution = relative_value_iteration(params)
        assert solution.theta_star == pytest.approx(4.0, abs=1e-8)
        # every action costs the same, so ties idle everywhere
        assert not solution.policy.any()

    def test_matches_brute_force(self):
        params = SystemParams(p=0.4, q=0.7, beta=0.3, p_s=0.5, e_max=1, delta_max=2)
        theta, _ = brute_force_optimal(params)
        assert abs(relative_value_iteration(params).theta_star - theta) < 1e-6

    def test_random_small_instances(self):
        rng = np.random.default_rng(2024)
        for _ in range(20):
            p, q, beta = rng.uniform(0.05, 0.95, size=3)
            p_s = rng.uniform(0.0, 1.0)
            params = SystemParams(p=p, q=q, beta=beta, p_s=p_s, e_max=1, delta_max=2)
            theta, _ = brute_force_optimal(params)
            assert abs(relative_value_iteration(params).theta_star - theta) < 1e-6, params

    def test_other_reference_state(self, fig2_solution):
        params = fig2_solution.params
        solution = relative_value_iteration(params, SolverConfig(reference=(5, 1, 5)))
        assert solution.theta_star == pytest.approx(fig2_solution.theta_star, abs=1e-8)
        assert solution.value(State(5, 1, 5)) == 0.0

    def test_warm_start(self, fig2_solution):
        solution = relative_value_iteration(fig2_solution.params, initial_values=fig2_solution.v)
        assert solution.iterations < fig2_solution.iterations
        assert solution.theta_star == pytest.approx(fig2_solution.theta_star, abs=1e-8)

    def test_non_convergence(self):
        params = SystemParams(p=0.4, q=0.7, beta=0.2, p_s=0.5)
        with pytest.raises(ConvergenceError) as excinfo:
            relative_value_iteration(params, SolverConfig(max_iters=3))
        assert excinfo.value.span_residual >= 1e-9
        assert excinfo.value.solution.converged is False
        assert excinfo.value.solution.iterations == 3

    def test_rejects_bad_options(self):
        params = SystemParams(p=0.4, q=0.7, beta=0.2, p_s=0.5)
        with pytest.raises(ValueError):
            relative_value_iteration(params, SolverConfig(epsilon=0.0))
        with pytest.raises(ValueError):
            relative_value_iteration(params, SolverConfig(reference=(11, 0, 0)))


class TestExtractPolicy:
    def test_sign_rule(self, fig2_solution):
        params = fig2_solution.params
        v0, v1 = action_values(fig2_solution.v, params)
        policy = extract_policy(fig2_solution.v, params)
        for i, s in enumerate(enumerate_states(params)):
            if s.e > 0 and v1[i] - v0[i] < -1e-6:
                assert policy[i] == 1
            if v1[i] - v0[i] > 1e-6:
                assert policy[i] == 0

    def test_ties_idle(self):
        params = SystemParams(p=0.4, q=0.7, beta=0.2, p_s=0.5, e_max=1, delta_max=2)
        assert not extract_policy(np.zeros(params.num_states), params).any()

    def test_empty_battery_forced_idle(self, fig2_solution):
        params = fig2_solution.params
        policy = extract_policy(-fig2_solution.v, params)
        for i, s in enumerate(enumerate_states(params)):
            if s.e == 0:
                assert policy[i] == 0


class TestStateCosts:
    def test_cost_is_delta(self):
        params = SystemParams(p=0.4, q=0.7, beta=0.2, p_s=0.5, e_max=1, delta_max=2)
        assert state_costs(params).tolist() == [0, 1, 2] * 4


class TestInitialValues:
    def test_random_start_agrees(self, fig2_solution):
        params = fig2_solution.params
        start = np.random.default_rng(7).normal(scale=5.0, size=params.num_states)
        solution = relative_value_iteration(params, initial_values=start)
        assert abs(solution.theta_star - fig2_solution.theta_star) < 1e-8
        np.testing.assert_array_equal(solution.policy, fig2_solution.policy)

    def test_shape_checked(self):
        params = SystemParams(p=0.4, q=0.7, beta=0.2, p_s=0.5)
        with pytest.raises(ValueError, match="shape"):
            relative_value_iteration(params, initial_values=np.zeros(3))
