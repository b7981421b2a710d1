"""Solve node - runs RVI and checks it against exact policy evaluation."""

from ...evaluate import exact_metrics
from ...policies import OptimalTable
from ...solver import ConvergenceError, bellman_residual, relative_value_iteration
from ...workflow_logger import get_logger
from ..state import VerifyState
from .common import log_node, make_check, record_checks


def solve_node(state: VerifyState) -> VerifyState:
    """Solve the MDP; record self-consistency and Bellman residual checks."""
    log_node("SOLVE", state)
    params = state["params"]
    opts = state["solver"]
    tolerance = 10 * opts.epsilon

    try:
        solution = relative_value_iteration(params, opts)
    except ConvergenceError as e:
        check = make_check("solver_convergence", False, residual=e.span_residual, tolerance=opts.epsilon)
        return {
            **state,
            "solution": e.solution,
            "checks": record_checks(state, check),
            "status": "error",
            "error_message": str(e),
        }

    logger = get_logger()
    if logger:
        logger.log_solution(solution.summary())

    optimal = exact_metrics(OptimalTable(actions=solution.policy, params=params), params)
    gap = abs(solution.theta_star - optimal.avg_via)
    residual = bellman_residual(solution)
    checks = [
        make_check(
            "self_consistency",
            gap < tolerance,
            residual=gap,
            tolerance=tolerance,
            detail=f"theta*={solution.theta_star!r} exact={optimal.avg_via!r} ({optimal.method})",
        ),
        make_check("bellman_residual", residual < tolerance, residual=residual, tolerance=tolerance),
    ]
    return {
        **state,
        "solution": solution,
        "exact": {**state["exact"], "optimal": optimal.to_dict()},
        "checks": record_checks(state, *checks),
    }


def solve_decision(state: VerifyState) -> str:
    """Stop early when the solver failed."""
    return "output" if state.get("status") == "error" else "structure"
