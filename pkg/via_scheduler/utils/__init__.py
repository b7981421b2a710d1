"""Utility modules for VIA scheduler."""

from .grid_io import (
    METRICS_HEADER,
    POLICY_GRID_HEADER,
    SIMULATION_HEADER,
    THRESHOLD_HEADER,
    TRACE_HEADER,
    VALUE_HEADER,
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

__all__ = [
    "METRICS_HEADER",
    "POLICY_GRID_HEADER",
    "SIMULATION_HEADER",
    "THRESHOLD_HEADER",
    "TRACE_HEADER",
    "VALUE_HEADER",
    "format_value",
    "params_to_dict",
    "read_policy_grid",
    "write_metrics_table",
    "write_policy_grid",
    "write_report",
    "write_simulation_table",
    "write_threshold_table",
    "write_trace",
    "write_value_table",
]
