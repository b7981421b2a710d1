"""Helpers shared by verification nodes."""

from typing import Any, Dict, List, Optional

from ...utils import params_to_dict
from ...workflow_logger import get_logger, get_structured_logger
from ..state import VerifyState


def make_check(
    name: str,
    passed: bool,
    residual: Optional[float] = None,
    tolerance: Optional[float] = None,
    violations: Optional[List[str]] = None,
    detail: str = "",
) -> Dict[str, Any]:
    check: Dict[str, Any] = {"name": name, "passed": bool(passed)}
    if residual is not None:
        check["residual"] = float(residual)
    if tolerance is not None:
        check["tolerance"] = float(tolerance)
    if violations:
        check["violations"] = list(violations)
    if detail:
        check["detail"] = detail
    return check


def record_checks(state: VerifyState, *checks: Dict[str, Any]) -> List[Dict[str, Any]]:
    """Log the checks and return the state's check list extended by them."""
    logger = get_logger()
    structured_logger = get_structured_logger()
    for check in checks:
        if logger:
            logger.log_check(check)
        if structured_logger:
            structured_logger.log_check(check, params_to_dict(state["params"]))
    return state["checks"] + list(checks)


def log_node(step: str, state: VerifyState):
    logger = get_logger()
    if logger:
        params = state["params"]
        logger.log_step(step, f"p={params.p} q={params.q} beta={params.beta} p_s={params.p_s}")
