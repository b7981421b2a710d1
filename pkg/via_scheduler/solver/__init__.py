"""Average-cost solver and structural verification."""

from .rvi import (
    ConvergenceError,
    Solution,
    action_values,
    bellman_residual,
    extract_policy,
    relative_value_iteration,
    state_costs,
)
from .structure import (
    DeltaVProfile,
    ThresholdReport,
    Violation,
    delta_v_profile,
    threshold_report,
)

__all__ = [
    "ConvergenceError",
    "Solution",
    "action_values",
    "bellman_residual",
    "extract_policy",
    "relative_value_iteration",
    "state_costs",
    "DeltaVProfile",
    "ThresholdReport",
    "Violation",
    "delta_v_profile",
    "threshold_report",
]
