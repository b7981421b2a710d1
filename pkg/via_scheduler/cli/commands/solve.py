"""Solve command - optimal policy, thresholds and value table for one parameter set."""

import copy
import os
from typing import Dict, Tuple

from ...config import ExperimentConfig
from ...evaluate import exact_metrics
from ...policies import OptimalTable
from ...solver import ConvergenceError, Solution, delta_v_profile, relative_value_iteration, threshold_report
from ...utils import (
    params_to_dict,
    write_policy_grid,
    write_report,
    write_threshold_table,
    write_value_table,
)
from ...workflow_logger import get_logger, get_structured_logger
from ..helpers import fail, load_config_or_exit, setup_logging


def run_solve(config: ExperimentConfig) -> Tuple[Solution, Dict[str, str]]:
    """Solve at config.params and write the result files.

    Writes policy_grid.csv, thresholds.csv, values.csv and solve_summary.json
    into config.output.out_dir. On non-convergence only the summary is written
    and the ConvergenceError is re-raised.
    """
    params = config.params
    out_dir = config.output.out_dir
    outputs = {"summary": os.path.join(out_dir, "solve_summary.json")}

    logger = get_logger()
    if logger:
        logger.log_step("SOLVE", f"E_max={params.e_max} Delta_max={params.delta_max}")

    try:
        solution = relative_value_iteration(params, config.solver)
    except ConvergenceError as e:
        summary = {**e.solution.summary(), "params": params_to_dict(params)}
        write_report(outputs["summary"], summary)
        raise

    exact = exact_metrics(OptimalTable(actions=solution.policy, params=params), params)
    report = threshold_report(solution.policy, params)
    profile = delta_v_profile(solution.v, params)

    # the exact evaluation is the reported average cost
    summary = {
        **solution.summary(),
        "theta_star": exact.avg_via,
        "theta_rvi": solution.theta_star,
        "avg_energy": exact.avg_energy,
        "evaluation_method": exact.method,
        "threshold_violations": len(report.violations),
        "params": params_to_dict(params),
    }

    outputs["policy_grid"] = write_policy_grid(os.path.join(out_dir, "policy_grid.csv"), solution.policy, params)
    outputs["thresholds"] = write_threshold_table(os.path.join(out_dir, "thresholds.csv"), report.thresholds)
    outputs["values"] = write_value_table(os.path.join(out_dir, "values.csv"), solution.v, profile.delta_v, params)
    write_report(outputs["summary"], summary)

    if logger:
        logger.log_solution(summary)
    structured_logger = get_structured_logger()
    if structured_logger:
        structured_logger.log_solution(summary, params_to_dict(params), step="solve")
    return solution, outputs


def point_dir(out_dir: str, params) -> str:
    """Per-point output directory used when the config sweeps several points."""
    return os.path.join(out_dir, f"p{params.p}_q{params.q}_beta{params.beta}_ps{params.p_s}")


def cmd_solve(args):
    """Solve the MDP and write the policy grid (one directory per point when sweeping)."""
    config = load_config_or_exit(args)
    setup_logging(args, "solve", config, args.config)

    grid = config.grid()
    all_outputs = {}
    for params in grid:
        point = copy.deepcopy(config)
        point.params = params
        if len(grid) > 1:
            point.output.out_dir = point_dir(config.output.out_dir, params)
        try:
            solution, outputs = run_solve(point)
        except ConvergenceError as e:
            logger = get_logger()
            if logger:
                logger.log_error(str(e))
            fail(f"{e}; summary written to {os.path.join(point.output.out_dir, 'solve_summary.json')}", code=2)

        label = f"p={params.p} q={params.q} beta={params.beta} p_s={params.p_s}"
        print(label)
        print(f"  theta* (RVI) = {solution.theta_star!r} after {solution.iterations} sweeps")
        print(f"  span residual = {solution.span_residual:.3e}")
        for name, path in outputs.items():
            print(f"  {name}: {path}")
            all_outputs[f"{name} ({label})" if len(grid) > 1 else name] = path

    logger = get_logger()
    if logger:
        logger.log_final_result(True, all_outputs)
