"""Exact long-run metrics of stationary policies and a brute-force optimum."""

import itertools
import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..model import SystemParams, enumerate_states
from ..policies import OptimalTable, Policy
from ..solver.structure import threshold_report
from .chain import induced_chain, stationary_distribution

logger = logging.getLogger(__name__)

BRUTE_FORCE_MAX_STATES = 14
TIE_TOLERANCE = 1e-12


@dataclass
class ExactMetrics:
    """Time-average VIA and energy use from the stationary distribution."""

    avg_via: float
    avg_energy: float
    method: str

    def to_dict(self) -> dict:
        return {"avg_via": self.avg_via, "avg_energy": self.avg_energy, "method": self.method}


def exact_metrics(policy: Policy, params: SystemParams) -> ExactMetrics:
    """avg_via = sum pi(s) Delta(s), avg_energy = sum pi(s) Pr[transmit | s]."""
    chain = induced_chain(policy, params)
    result = stationary_distribution(chain)
    deltas = np.array([s.delta for s in enumerate_states(params)], dtype=float)
    return ExactMetrics(
        avg_via=float(result.distribution @ deltas),
        avg_energy=float(result.distribution @ chain.transmit_indicator),
        method=result.method,
    )


def brute_force_optimal(params: SystemParams) -> Tuple[float, np.ndarray]:
    """Minimum average VIA over every deterministic policy that idles at e = 0.

    Near-ties resolve toward the candidate with fewest threshold violations,
    then fewest transmitting states, then enumeration order.
    """
    n = params.num_states
    if n > BRUTE_FORCE_MAX_STATES:
        raise ValueError(
            f"brute force limited to {BRUTE_FORCE_MAX_STATES} states, instance has {n}"
        )
    free = [i for i, s in enumerate(enumerate_states(params)) if s.e > 0]
    logger.debug("brute force over 2^%d policies", len(free))

    best_theta = float("inf")
    best_key = None
    best_actions = None
    for bits in itertools.product((0, 1), repeat=len(free)):
        actions = np.zeros(n, dtype=np.int8)
        actions[free] = bits
        theta = exact_metrics(OptimalTable(actions=actions, params=params), params).avg_via
        if theta > best_theta + TIE_TOLERANCE:
            continue
        key = (len(threshold_report(actions, params).violations), int(actions.sum()))
        if theta < best_theta - TIE_TOLERANCE or key < best_key:
            best_theta = min(theta, best_theta)
            best_key = key
            best_actions = actions
    return best_theta, best_actions
