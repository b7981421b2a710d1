"""Tests for result file readers and writers."""

import json

import numpy as np
import pytest

from via_scheduler.model import State, SystemParams, state_index
from via_scheduler.simulate import TraceRecord
from via_scheduler.utils import (
    METRICS_HEADER,
    format_value,
    params_to_dict,
    read_policy_grid,
    write_metrics_table,
    write_policy_grid,
    write_report,
    write_simulation_table,
    write_threshold_table,
    write_trace,
    write_value_table,
)


@pytest.fixture
def params():
    return SystemParams(p=0.4, q=0.7, beta=0.2, p_s=0.5, e_max=1, delta_max=1)


def read_lines(path):
    with open(path) as f:
        return f.read().splitlines()


class TestFormatValue:
    def test_float_round_trip(self):
        assert format_value(0.1) == "0.1"
        assert float(format_value(1 / 3)) == 1 / 3
        assert format_value(np.float64(2.5)) == "2.5"

    def test_none_and_ints(self):
        assert format_value(None) == ""
        assert format_value(np.int8(1)) == "1"
        assert format_value(True) == "1"
        assert format_value("optimal") == "optimal"


class TestPolicyGrid:
    def test_write_canonical_order(self, tmp_path, params):
        actions = np.array([0, 0, 0, 0, 0, 1, 0, 1], dtype=np.int8)
        path = write_policy_grid(str(tmp_path / "grid.csv"), actions, params)
        assert read_lines(path) == [
            "e,x,delta,action",
            "0,0,0,0",
            "0,0,1,0",
            "0,1,0,0",
            "0,1,1,0",
            "1,0,0,0",
            "1,0,1,1",
            "1,1,0,0",
            "1,1,1,1",
        ]

    def test_read_back(self, tmp_path, params):
        actions = np.array([0, 0, 0, 0, 0, 1, 0, 1], dtype=np.int8)
        path = write_policy_grid(str(tmp_path / "grid.csv"), actions, params)
        np.testing.assert_array_equal(read_policy_grid(path, params), actions)

    def test_read_any_row_order(self, tmp_path, params):
        path = tmp_path / "grid.csv"
        rows = ["e,x,delta,action"] + [f"{e},{x},{d},{int(e == 1 and d == 1)}" for e in (1, 0) for x in (1, 0) for d in (1, 0)]
        path.write_text("\n".join(rows) + "\n")
        actions = read_policy_grid(str(path), params)
        assert actions[state_index(State(1, 0, 1), params)] == 1
        assert actions.sum() == 2

    def test_bad_header(self, tmp_path, params):
        path = tmp_path / "grid.csv"
        path.write_text("e,x,d,a\n")
        with pytest.raises(ValueError, match="header"):
            read_policy_grid(str(path), params)

    def test_missing_states(self, tmp_path, params):
        path = tmp_path / "grid.csv"
        path.write_text("e,x,delta,action\n0,0,0,0\n")
        with pytest.raises(ValueError, match="7 state"):
            read_policy_grid(str(path), params)

    def test_out_of_bounds(self, tmp_path, params):
        path = tmp_path / "grid.csv"
        path.write_text("e,x,delta,action\n5,0,0,0\n")
        with pytest.raises(ValueError, match="out of bounds"):
            read_policy_grid(str(path), params)

    def test_bad_action(self, tmp_path, params):
        path = tmp_path / "grid.csv"
        path.write_text("e,x,delta,action\n0,0,0,3\n")
        with pytest.raises(ValueError, match="0 or 1"):
            read_policy_grid(str(path), params)


class TestTables:
    def test_threshold_table(self, tmp_path):
        path = write_threshold_table(str(tmp_path / "t.csv"), {(1, 1): 2, (0, 0): None, (1, 0): 1, (0, 1): None})
        assert read_lines(path) == ["e,x,threshold", "0,0,", "0,1,", "1,0,1", "1,1,2"]

    def test_value_table(self, tmp_path, params):
        v = np.arange(8, dtype=float) / 4
        path = write_value_table(str(tmp_path / "v.csv"), v, -v, params)
        lines = read_lines(path)
        assert lines[0] == "e,x,delta,v,delta_v"
        assert lines[2] == "0,0,1,0.25,-0.25"
        assert len(lines) == 9

    def test_metrics_table(self, tmp_path):
        rows = [
            {"p": 0.4, "q": 0.7, "beta": 0.2, "p_s": 0.5, "policy": "greedy", "method": "exact",
             "avg_via": 1.5, "avg_energy": 0.2},
            {"p": 0.4, "q": 0.7, "beta": 0.2, "p_s": 0.5, "policy": "optimal", "method": "exact",
             "error": "ConvergenceError: no"},
        ]
        lines = read_lines(write_metrics_table(str(tmp_path / "m.csv"), rows))
        assert lines[0] == ",".join(METRICS_HEADER)
        assert lines[1] == "0.4,0.7,0.2,0.5,greedy,exact,1.5,0.2,,"
        assert lines[2] == "0.4,0.7,0.2,0.5,optimal,exact,,,,ConvergenceError: no"

    def test_simulation_table(self, tmp_path):
        rows = [{"policy": "rs", "seed": None, "slot_count": 10, "avg_via": 1.0}]
        lines = read_lines(write_simulation_table(str(tmp_path / "s.csv"), rows))
        assert lines[1] == "rs,,10,1.0,,,,,"

    def test_trace(self, tmp_path):
        records = [TraceRecord(1, 0, 1, 0, 0, None, 1), TraceRecord(2, 1, 1, 1, 1, 0, 0)]
        lines = read_lines(write_trace(str(tmp_path / "sub" / "trace.csv"), records))
        assert lines == ["t,e,x,delta,action,channel,arrival", "1,0,1,0,0,,1", "2,1,1,1,1,0,0"]

    def test_deterministic_bytes(self, tmp_path, params):
        actions = np.zeros(8, dtype=np.int8)
        a = write_policy_grid(str(tmp_path / "a.csv"), actions, params)
        b = write_policy_grid(str(tmp_path / "b.csv"), actions, params)
        assert open(a, "rb").read() == open(b, "rb").read()


class TestReport:
    def test_sorted_json(self, tmp_path, params):
        path = write_report(
            str(tmp_path / "r.json"),
            {"b": np.float64(0.5), "a": np.arange(2), "params": params_to_dict(params)},
        )
        text = open(path).read()
        data = json.loads(text)
        assert list(data) == ["a", "b", "params"]
        assert data["a"] == [0, 1]
        assert data["params"]["e_max"] == 1
        assert text.endswith("}\n")

    def test_unserializable(self, tmp_path):
        with pytest.raises(TypeError):
            write_report(str(tmp_path / "r.json"), {"x": object()})
