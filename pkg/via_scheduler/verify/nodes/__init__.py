"""LangGraph nodes for the verification workflow."""

from .kernel import kernel_node
from .solve import solve_node, solve_decision
from .structure import structure_node
from .baselines import baselines_node
from .oracle import oracle_node
from .simulation import simulation_node, agreement_bound
from .router import router_node, route_decision

__all__ = [
    "kernel_node",
    "solve_node",
    "solve_decision",
    "structure_node",
    "baselines_node",
    "oracle_node",
    "simulation_node",
    "agreement_bound",
    "router_node",
    "route_decision",
]
