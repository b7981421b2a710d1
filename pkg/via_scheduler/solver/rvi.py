"""Relative value iteration for the average-VIA MDP."""

import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from ..config import SolverConfig
from ..model import IDLE, State, SystemParams, enumerate_states, kernel_matrices, state_index

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 5000


@dataclass
class Solution:
    """Optimal average cost, differential values and greedy policy."""

    params: SystemParams
    theta_star: float
    v: np.ndarray
    policy: np.ndarray
    iterations: int
    span_residual: float
    reference: State = State(0, 0, 0)
    converged: bool = True

    def value(self, s: State) -> float:
        return float(self.v[state_index(s, self.params)])

    def action(self, s: State) -> int:
        return int(self.policy[state_index(s, self.params)])

    def summary(self) -> dict:
        return {
            "theta_star": float(self.theta_star),
            "iterations": int(self.iterations),
            "span_residual": float(self.span_residual),
            "converged": bool(self.converged),
            "reference": list(self.reference),
        }


class ConvergenceError(RuntimeError):
    """Relative value iteration did not reach the span tolerance."""

    def __init__(self, solution: Solution, max_iters: int):
        super().__init__(
            f"relative value iteration did not converge in {max_iters} iterations "
            f"(span residual {solution.span_residual:.3e})"
        )
        self.solution = solution
        self.span_residual = solution.span_residual


def state_costs(params: SystemParams) -> np.ndarray:
    """Per-slot cost Delta(s) over the canonical ordering."""
    return np.array([s.delta for s in enumerate_states(params)], dtype=float)


def action_values(v: np.ndarray, params: SystemParams) -> Tuple[np.ndarray, np.ndarray]:
    """One-step lookahead values (V^0, V^1) for a differential value table."""
    p0, p1 = kernel_matrices(params)
    cost = state_costs(params)
    return cost + p0 @ v, cost + p1 @ v


def extract_policy(
    v: np.ndarray,
    params: SystemParams,
    tie_tolerance: float = 1e-12,
) -> np.ndarray:
    """Greedy action table: transmit iff V^1(s) - V^0(s) < 0.

    Differences within tie_tolerance of zero count as ties and idle, which
    covers every empty-battery state where both rows coincide.
    """
    v0, v1 = action_values(np.asarray(v, dtype=float), params)
    policy = (v1 - v0 < -tie_tolerance).astype(np.int8)
    empty = np.array([s.e == 0 for s in enumerate_states(params)])
    policy[empty] = IDLE
    return policy


def relative_value_iteration(
    params: SystemParams,
    opts: Optional[SolverConfig] = None,
    initial_values: Optional[np.ndarray] = None,
) -> Solution:
    """Solve theta + V(s) = min_a {Delta(s) + sum_s' Pr[s'|s,a] V(s')}.

    Each sweep applies the Bellman operator and subtracts the reference-state
    value; iteration stops once the span of successive differences drops
    below opts.epsilon. The returned theta_star is the reference-state gain
    of the last sweep.
    """
    opts = opts or SolverConfig()
    if opts.epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {opts.epsilon!r}")
    reference = State(*opts.reference)
    if not reference.in_bounds(params):
        raise ValueError(f"reference state {tuple(reference)} out of bounds")

    p0, p1 = kernel_matrices(params)
    cost = state_costs(params)
    ref = state_index(reference, params)

    w = np.zeros(params.num_states)
    if initial_values is not None:
        w = np.asarray(initial_values, dtype=float).copy()
        if w.shape != (params.num_states,):
            raise ValueError(f"initial_values must have shape ({params.num_states},)")
        w -= w[ref]

    span = float("inf")
    gain = 0.0
    iterations = 0
    for iterations in range(1, opts.max_iters + 1):
        tw = np.minimum(cost + p0 @ w, cost + p1 @ w)
        diff = tw - w
        span = float(diff.max() - diff.min())
        gain = float(tw[ref])
        w = tw - gain
        if iterations % PROGRESS_EVERY == 0:
            logger.debug("RVI sweep %d: span=%.3e gain=%.12f", iterations, span, gain)
        if span < opts.epsilon:
            break

    solution = Solution(
        params=params,
        theta_star=gain,
        v=w,
        policy=extract_policy(w, params, opts.tie_tolerance),
        iterations=iterations,
        span_residual=span,
        reference=reference,
        converged=span < opts.epsilon,
    )
    if not solution.converged:
        logger.error("RVI stopped after %d sweeps with span %.3e", iterations, span)
        raise ConvergenceError(solution, opts.max_iters)

    logger.debug("RVI converged in %d sweeps: theta*=%.12f", iterations, gain)
    return solution


def bellman_residual(solution: Solution) -> float:
    """max_s |theta* + V(s) - min_a (Delta(s) + sum Pr V(s'))|."""
    v0, v1 = action_values(solution.v, solution.params)
    return float(np.max(np.abs(solution.theta_star + solution.v - np.minimum(v0, v1))))
