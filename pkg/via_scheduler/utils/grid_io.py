"""CSV/JSON readers and writers for result files.

All writers use fixed headers, canonical row order and shortest round-trip
float formatting, so identical inputs give byte-identical files.
"""

import csv
import json
import os
from dataclasses import asdict
from typing import Any, Dict, Iterable, List

import numpy as np

from ..model import State, SystemParams, enumerate_states, state_index

POLICY_GRID_HEADER = ["e", "x", "delta", "action"]
THRESHOLD_HEADER = ["e", "x", "threshold"]
VALUE_HEADER = ["e", "x", "delta", "v", "delta_v"]
METRICS_HEADER = [
    "p", "q", "beta", "p_s", "policy", "method",
    "avg_via", "avg_energy", "std_err", "error",
]
TRACE_HEADER = ["t", "e", "x", "delta", "action", "channel", "arrival"]
SIMULATION_HEADER = [
    "policy", "seed", "slot_count", "avg_via", "avg_energy",
    "via_std_error", "energy_std_error", "exact_avg_via", "exact_avg_energy",
]


def format_value(value: Any) -> str:
    """Render a cell: repr for floats, '' for None."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if isinstance(value, np.integer):
        return str(int(value))
    return str(value)


def params_to_dict(params: SystemParams) -> Dict[str, Any]:
    return asdict(params)


def _ensure_parent(path: str):
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)


def _write_rows(path: str, header: List[str], rows: Iterable[Iterable[Any]]) -> str:
    _ensure_parent(path)
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(v) for v in row])
    return path


def write_policy_grid(path: str, actions: np.ndarray, params: SystemParams) -> str:
    """One row per state in canonical order: e,x,delta,action."""
    actions = np.asarray(actions)
    return _write_rows(
        path,
        POLICY_GRID_HEADER,
        ((s.e, s.x, s.delta, int(actions[i])) for i, s in enumerate(enumerate_states(params))),
    )


def read_policy_grid(path: str, params: SystemParams) -> np.ndarray:
    """Load an action table written by write_policy_grid (any row order)."""
    actions = np.full(params.num_states, -1, dtype=np.int8)
    with open(path, "r", newline="") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header != POLICY_GRID_HEADER:
            raise ValueError(f"{path}: expected header {','.join(POLICY_GRID_HEADER)}, got {header}")
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                e, x, delta, action = (int(v) for v in row)
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: malformed row {row}") from exc
            s = State(e, x, delta)
            if not s.in_bounds(params):
                raise ValueError(f"{path}:{lineno}: state {tuple(s)} out of bounds")
            if action not in (0, 1):
                raise ValueError(f"{path}:{lineno}: action must be 0 or 1, got {action}")
            actions[state_index(s, params)] = action
    missing = int((actions < 0).sum())
    if missing:
        raise ValueError(f"{path}: {missing} state(s) missing from the policy grid")
    return actions


def write_threshold_table(path: str, thresholds: Dict[tuple, Any]) -> str:
    """Per-(e, x) smallest transmitting delta; empty cell when the policy never transmits."""
    return _write_rows(
        path,
        THRESHOLD_HEADER,
        ((e, x, thresholds[(e, x)]) for e, x in sorted(thresholds)),
    )


def write_value_table(path: str, v: np.ndarray, delta_v: np.ndarray, params: SystemParams) -> str:
    return _write_rows(
        path,
        VALUE_HEADER,
        (
            (s.e, s.x, s.delta, float(v[i]), float(delta_v[i]))
            for i, s in enumerate(enumerate_states(params))
        ),
    )


def write_metrics_table(path: str, rows: Iterable[Dict[str, Any]]) -> str:
    return _write_rows(path, METRICS_HEADER, ([row.get(k) for k in METRICS_HEADER] for row in rows))


def write_simulation_table(path: str, rows: Iterable[Dict[str, Any]]) -> str:
    return _write_rows(path, SIMULATION_HEADER, ([row.get(k) for k in SIMULATION_HEADER] for row in rows))


def write_trace(path: str, records: Iterable[Any]) -> str:
    return _write_rows(path, TRACE_HEADER, ([getattr(r, k) for k in TRACE_HEADER] for r in records))


def write_report(path: str, data: Dict[str, Any]) -> str:
    """Structured JSON report with sorted keys."""
    _ensure_parent(path)
    with open(path, "w") as f:
        json.dump(data, f, indent=2, sort_keys=True, default=_json_default)
        f.write("\n")
    return path


def _json_default(value: Any):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"cannot serialize {type(value).__name__}")
