"""Router node - decides which optional stage runs next."""

from ..state import VerifyState


def router_node(state: VerifyState) -> VerifyState:
    """Route to the next pending stage, or to output when none is left."""
    pending = state.get("pending", [])
    if pending:
        return {**state, "next_action": pending[0]}
    return {**state, "next_action": "output"}


def route_decision(state: VerifyState) -> str:
    """Return the routing decision."""
    return state.get("next_action", "output")
