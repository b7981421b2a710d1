"""LangGraph verification workflow."""

from typing import List, Optional

import numpy as np
from langgraph.graph import END, StateGraph

from ..config import SimConfig, SolverConfig
from ..evaluate import BRUTE_FORCE_MAX_STATES
from ..model import SystemParams
from .nodes import (
    baselines_node,
    kernel_node,
    oracle_node,
    route_decision,
    router_node,
    simulation_node,
    solve_decision,
    solve_node,
    structure_node,
)
from .state import VerifyState


def create_verify_workflow():
    """
    Create the verification workflow.

    kernel -> solve -> structure -> baselines -> router, then the optional
    oracle and simulation stages loop back through the router until nothing
    is pending.

    Returns:
        Compiled LangGraph workflow
    """
    workflow = StateGraph(VerifyState)

    def output_handler(state: VerifyState) -> VerifyState:
        if state.get("status") == "error":
            return state
        passed = all(check["passed"] for check in state["checks"])
        return {**state, "status": "passed" if passed else "failed"}

    workflow.add_node("kernel", kernel_node)
    workflow.add_node("solve", solve_node)
    workflow.add_node("structure", structure_node)
    workflow.add_node("baselines", baselines_node)
    workflow.add_node("router", router_node)
    workflow.add_node("oracle", oracle_node)
    workflow.add_node("simulate", simulation_node)
    workflow.add_node("output_handler", output_handler)

    workflow.set_entry_point("kernel")
    workflow.add_edge("kernel", "solve")
    workflow.add_conditional_edges(
        "solve",
        solve_decision,
        {"structure": "structure", "output": "output_handler"},
    )
    workflow.add_edge("structure", "baselines")
    workflow.add_edge("baselines", "router")
    workflow.add_conditional_edges(
        "router",
        route_decision,
        {"oracle": "oracle", "simulate": "simulate", "output": "output_handler"},
    )
    workflow.add_edge("oracle", "router")
    workflow.add_edge("simulate", "router")
    workflow.add_edge("output_handler", END)

    return workflow.compile()


def initial_state(
    params: SystemParams,
    solver: SolverConfig,
    simulation: SimConfig,
    policies: List[str],
    policy_override: Optional[np.ndarray] = None,
) -> VerifyState:
    pending = []
    if params.num_states <= BRUTE_FORCE_MAX_STATES:
        pending.append("oracle")
    if simulation.horizon > 0:
        pending.append("simulate")
    return {
        "params": params,
        "solver": solver,
        "simulation": simulation,
        "policies": list(policies),
        "policy_override": policy_override,
        "solution": None,
        "exact": {},
        "pending": pending,
        "checks": [],
        "status": "running",
        "error_message": None,
        "next_action": None,
    }


def verify_point(
    params: SystemParams,
    solver: SolverConfig,
    simulation: SimConfig,
    policies: List[str],
    policy_override: Optional[np.ndarray] = None,
) -> VerifyState:
    """Run every verification check for one parameter set."""
    workflow = create_verify_workflow()
    return workflow.invoke(initial_state(params, solver, simulation, policies, policy_override))
