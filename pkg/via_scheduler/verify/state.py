"""State schema for the verification workflow."""

from typing import Any, Dict, List, Literal, Optional, TypedDict

import numpy as np

from ..config import SimConfig, SolverConfig
from ..model import SystemParams
from ..solver import Solution


class VerifyState(TypedDict):
    """State passed between verification nodes for one grid point."""

    # Input
    params: SystemParams
    solver: SolverConfig
    simulation: SimConfig
    policies: List[str]
    policy_override: Optional[np.ndarray]  # stored grid checked instead of the solved policy

    # Processing
    solution: Optional[Solution]
    exact: Dict[str, Dict[str, Any]]  # policy name -> ExactMetrics.to_dict()
    pending: List[str]  # optional stages still to run: "oracle", "simulate"

    # Output
    checks: List[Dict[str, Any]]
    status: Literal["running", "passed", "failed", "error"]
    error_message: Optional[str]

    # Routing
    next_action: Optional[str]
