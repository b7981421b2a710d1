"""Structure node - threshold form of the policy and Delta V monotonicity."""

from ...solver import delta_v_profile, threshold_report
from ..state import VerifyState
from .common import log_node, make_check, record_checks


def structure_node(state: VerifyState) -> VerifyState:
    params = state["params"]
    solution = state["solution"]
    policy = state.get("policy_override")
    source = "stored grid"
    if policy is None:
        policy = solution.policy
        source = "solved policy"
    log_node("STRUCTURE", state)

    report = threshold_report(policy, params)
    shape_violations = [
        f"{v.rule} at {tuple(v.state)}" + (f": {v.detail}" if v.detail else "")
        for v in report.violations
        if v.rule in ("delta-monotone", "battery-monotone")
    ]
    idle_violations = [
        f"{v.rule} at {tuple(v.state)}"
        for v in report.violations
        if v.rule in ("idle-when-empty", "idle-when-fresh")
    ]

    profile = delta_v_profile(solution.v, params)
    checks = [
        make_check("threshold_structure", not shape_violations, violations=shape_violations, detail=source),
        make_check(
            "idle_rules",
            report.idle_when_empty and report.idle_when_fresh,
            violations=idle_violations,
            detail=source,
        ),
        make_check(
            "delta_v_monotonicity",
            not profile.flags,
            violations=[f"Delta V increases in delta at (e={e}, x={x})" for e, x in profile.flags],
        ),
    ]
    return {**state, "checks": record_checks(state, *checks)}
