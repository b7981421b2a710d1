"""Kernel node - validates the transition kernel."""

from ...model import validate_kernel
from ..state import VerifyState
from .common import log_node, make_check, record_checks


def kernel_node(state: VerifyState) -> VerifyState:
    """Check every kernel row for stochasticity, bounds and e=0 equivalence."""
    log_node("KERNEL", state)
    report = validate_kernel(state["params"])
    check = make_check(
        "kernel_validity",
        report.ok,
        violations=report.violations,
        detail=f"{report.rows_checked} rows checked",
    )
    return {**state, "checks": record_checks(state, check), "status": "running"}
