"""Exact evaluation of stationary policies."""

from .chain import (
    PROPAGATION,
    STATIONARY_SOLVE,
    InducedChain,
    StationaryDistributionError,
    StationaryResult,
    induced_chain,
    stationary_distribution,
)
from .metrics import BRUTE_FORCE_MAX_STATES, ExactMetrics, brute_force_optimal, exact_metrics

__all__ = [
    "PROPAGATION",
    "STATIONARY_SOLVE",
    "InducedChain",
    "StationaryDistributionError",
    "StationaryResult",
    "induced_chain",
    "stationary_distribution",
    "BRUTE_FORCE_MAX_STATES",
    "ExactMetrics",
    "brute_force_optimal",
    "exact_metrics",
]
