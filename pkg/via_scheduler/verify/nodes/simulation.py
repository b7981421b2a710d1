"""Simulation node - Monte Carlo averages against the exact stationary values."""

from ...policies import make_policy
from ...simulate import simulate
from ..state import VerifyState
from .common import log_node, make_check, record_checks

RELATIVE_TOLERANCE = 0.01
STD_ERRORS = 3.0


def agreement_bound(exact: float, std_error: float) -> float:
    """max(1% of the exact value, 3 standard errors)."""
    return max(RELATIVE_TOLERANCE * abs(exact), STD_ERRORS * std_error)


def simulation_node(state: VerifyState) -> VerifyState:
    log_node("SIMULATE", state)
    params = state["params"]
    checks = []
    for name in state["policies"]:
        policy = make_policy(name, params, state["solution"].policy)
        stats = simulate(policy, params, state["simulation"])
        exact = state["exact"][name]

        via_gap = abs(stats.avg_via - exact["avg_via"])
        via_bound = agreement_bound(exact["avg_via"], stats.via_std_error)
        energy_gap = abs(stats.avg_energy - exact["avg_energy"])
        energy_bound = agreement_bound(exact["avg_energy"], stats.energy_std_error)
        checks.append(
            make_check(
                f"sim_vs_exact_{name}",
                via_gap <= via_bound and energy_gap <= energy_bound,
                residual=via_gap,
                tolerance=via_bound,
                detail=(
                    f"sim via={stats.avg_via!r} exact via={exact['avg_via']!r}; "
                    f"sim energy={stats.avg_energy!r} exact energy={exact['avg_energy']!r} "
                    f"(bound {energy_bound!r})"
                ),
            )
        )
    return {
        **state,
        "pending": [stage for stage in state["pending"] if stage != "simulate"],
        "checks": record_checks(state, *checks),
    }
