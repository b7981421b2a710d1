"""Oracle node - RVI against exhaustive policy search on small instances."""

from ...evaluate import brute_force_optimal
from ..state import VerifyState
from .common import log_node, make_check, record_checks

ORACLE_TOLERANCE = 1e-6


def oracle_node(state: VerifyState) -> VerifyState:
    log_node("ORACLE", state)
    theta, _ = brute_force_optimal(state["params"])
    gap = abs(state["solution"].theta_star - theta)
    check = make_check(
        "oracle_agreement",
        gap < ORACLE_TOLERANCE,
        residual=gap,
        tolerance=ORACLE_TOLERANCE,
        detail=f"brute force theta={theta!r}",
    )
    return {
        **state,
        "pending": [stage for stage in state["pending"] if stage != "oracle"],
        "checks": record_checks(state, check),
    }
