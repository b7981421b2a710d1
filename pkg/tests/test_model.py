"""Tests for model parameters and dynamics primitives."""

from types import SimpleNamespace

import pytest

from via_scheduler.model import (
    IDLE,
    TRANSMIT,
    State,
    SystemParams,
    battery_step,
    check_action,
    source_transition_prob,
    via_step,
)


@pytest.fixture
def params():
    return SystemParams(p=0.4, q=0.7, beta=0.2, p_s=0.5)


class TestSystemParams:
    def test_defaults(self, params):
        assert params.e_max == 10
        assert params.delta_max == 10
        assert params.p_alpha == 0.5
        assert params.num_states == 242

    def test_failure_probability(self, params):
        assert params.p_f == pytest.approx(0.5)

    def test_source_stationary(self, params):
        x0, x1 = params.source_stationary()
        assert x0 == pytest.approx(0.7 / 1.1)
        assert x1 == pytest.approx(0.4 / 1.1)

    @pytest.mark.parametrize("name", ["p", "q", "beta"])
    def test_open_interval_bounds(self, name):
        values = {"p": 0.4, "q": 0.7, "beta": 0.2, "p_s": 0.5}
        for bad in (0.0, 1.0, -0.1):
            values[name] = bad
            with pytest.raises(ValueError, match=name):
                SystemParams(**values)

    def test_channel_bounds_are_closed(self):
        assert SystemParams(p=0.4, q=0.7, beta=0.2, p_s=0.0).p_f == 1.0
        assert SystemParams(p=0.4, q=0.7, beta=0.2, p_s=1.0).p_f == 0.0
        with pytest.raises(ValueError, match="p_s"):
            SystemParams(p=0.4, q=0.7, beta=0.2, p_s=1.5)

    def test_lists_every_problem(self):
        with pytest.raises(ValueError) as excinfo:
            SystemParams(p=0.0, q=1.0, beta=0.2, p_s=0.5, delta_max=0)
        message = str(excinfo.value)
        assert "p=0.0" in message
        assert "q=1.0" in message
        assert "delta_max" in message

    def test_replace_revalidates(self, params):
        assert params.replace(beta=0.4).beta == 0.4
        assert params.beta == 0.2
        with pytest.raises(ValueError):
            params.replace(beta=1.0)

    def test_hashable(self, params):
        assert hash(params) == hash(SystemParams(p=0.4, q=0.7, beta=0.2, p_s=0.5))


class TestState:
    def test_in_bounds(self, params):
        assert State(0, 0, 0).in_bounds(params)
        assert State(10, 1, 10).in_bounds(params)
        assert not State(11, 0, 0).in_bounds(params)
        assert not State(0, 2, 0).in_bounds(params)
        assert not State(0, 0, 11).in_bounds(params)

    def test_check_action(self):
        assert check_action(0) == IDLE
        assert check_action(1) == TRANSMIT
        with pytest.raises(ValueError):
            check_action(2)


class TestSourceTransition:
    def test_flip_from_zero(self, params):
        assert source_transition_prob(0, 1, params) == pytest.approx(0.4)

    def test_stay_at_one(self, params):
        assert source_transition_prob(1, 1, params) == pytest.approx(0.3)

    def test_frozen_source(self):
        frozen = SimpleNamespace(p=0.0, q=0.0)
        assert source_transition_prob(0, 0, frozen) == 1.0

    def test_rows_sum_to_one(self, params):
        for x in (0, 1):
            total = source_transition_prob(x, 0, params) + source_transition_prob(x, 1, params)
            assert total == pytest.approx(1.0)

    def test_rejects_bad_states(self, params):
        with pytest.raises(ValueError):
            source_transition_prob(2, 0, params)


class TestViaStep:
    def test_success_with_change(self, params):
        assert via_step(3, True, TRANSMIT, True, params) == 1

    def test_success_without_change(self, params):
        assert via_step(5, False, TRANSMIT, True, params) == 0

    def test_clamp(self, params):
        assert via_step(10, True, IDLE, False, params) == 10

    def test_idle_unchanged(self, params):
        assert via_step(3, False, IDLE, False, params) == 3

    def test_failed_transmission_behaves_like_idle(self, params):
        assert via_step(3, True, TRANSMIT, False, params) == 4
        assert via_step(3, False, TRANSMIT, False, params) == 3

    def test_channel_ignored_when_idle(self, params):
        assert via_step(3, True, IDLE, True, params) == 4


class TestBatteryStep:
    def test_transmit_spends_one(self, params):
        assert battery_step(3, 0, TRANSMIT, params) == 2

    def test_clamp_at_capacity(self, params):
        assert battery_step(10, 1, IDLE, params) == 10

    def test_harvest_from_empty(self, params):
        assert battery_step(0, 1, IDLE, params) == 1

    def test_transmit_and_harvest(self, params):
        assert battery_step(10, 1, TRANSMIT, params) == 10

    def test_empty_battery_transmit_rejected(self, params):
        with pytest.raises(ValueError, match="e=0"):
            battery_step(0, 1, TRANSMIT, params)
