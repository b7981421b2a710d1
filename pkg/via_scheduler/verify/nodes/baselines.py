"""Baselines node - energy identities and dominance over RS and Greedy."""

from ...evaluate import exact_metrics
from ...policies import Greedy, RandomizedStationary
from ..state import VerifyState
from .common import log_node, make_check, record_checks

ENERGY_TOLERANCE = 1e-9


def baselines_node(state: VerifyState) -> VerifyState:
    log_node("BASELINES", state)
    params = state["params"]
    rs = exact_metrics(RandomizedStationary(p_alpha=params.p_alpha), params)
    greedy = exact_metrics(Greedy(), params)
    optimal_via = state["exact"]["optimal"]["avg_via"]

    checks = [
        make_check(
            "rs_energy",
            rs.avg_energy <= min(params.p_alpha, params.beta) + ENERGY_TOLERANCE,
            residual=rs.avg_energy - min(params.p_alpha, params.beta),
            tolerance=ENERGY_TOLERANCE,
        ),
        make_check(
            "baseline_dominance",
            optimal_via <= rs.avg_via + ENERGY_TOLERANCE and optimal_via <= greedy.avg_via + ENERGY_TOLERANCE,
            residual=optimal_via - min(rs.avg_via, greedy.avg_via),
            tolerance=ENERGY_TOLERANCE,
            detail=f"optimal={optimal_via!r} rs={rs.avg_via!r} greedy={greedy.avg_via!r}",
        ),
    ]
    if params.e_max >= 1:
        gap = abs(greedy.avg_energy - params.beta)
        checks.insert(
            0,
            make_check("greedy_energy", gap <= ENERGY_TOLERANCE, residual=gap, tolerance=ENERGY_TOLERANCE),
        )

    return {
        **state,
        "exact": {**state["exact"], "rs": rs.to_dict(), "greedy": greedy.to_dict()},
        "checks": record_checks(state, *checks),
    }
