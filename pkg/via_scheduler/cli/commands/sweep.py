"""Sweep command - exact and simulated metrics over a parameter grid."""

import logging
import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Any, Dict, List

from ...config import ExperimentConfig, SimConfig, SolverConfig
from ...evaluate import exact_metrics
from ...model import SystemParams
from ...policies import make_policy
from ...simulate import simulate
from ...solver import relative_value_iteration
from ...utils import write_metrics_table
from ...workflow_logger import get_logger
from ..helpers import load_config_or_exit, setup_logging

logger = logging.getLogger(__name__)


def _row(params: SystemParams, policy: str, method: str, **values) -> Dict[str, Any]:
    row = {
        "p": params.p,
        "q": params.q,
        "beta": params.beta,
        "p_s": params.p_s,
        "policy": policy,
        "method": method,
        "avg_via": None,
        "avg_energy": None,
        "std_err": None,
        "error": None,
    }
    row.update(values)
    return row


def _error_text(exc: Exception) -> str:
    return f"{type(exc).__name__}: {exc}"


def evaluate_point(
    params: SystemParams,
    policies: List[str],
    solver: SolverConfig,
    simulation: SimConfig,
) -> List[Dict[str, Any]]:
    """Metrics rows for one grid point: per policy an exact row, then a sim row if horizon > 0."""
    rows = []
    actions = None
    solve_error = None
    if "optimal" in policies:
        try:
            actions = relative_value_iteration(params, solver).policy
        except Exception as e:
            solve_error = _error_text(e)

    for name in policies:
        methods = ["exact"] + (["sim"] if simulation.horizon > 0 else [])
        if name == "optimal" and solve_error:
            rows.extend(_row(params, name, method, error=solve_error) for method in methods)
            continue
        policy = make_policy(name, params, actions)

        try:
            exact = exact_metrics(policy, params)
            rows.append(_row(params, name, "exact", avg_via=exact.avg_via, avg_energy=exact.avg_energy))
        except Exception as e:
            rows.append(_row(params, name, "exact", error=_error_text(e)))

        if simulation.horizon > 0:
            try:
                stats = simulate(policy, params, simulation)
                rows.append(
                    _row(
                        params,
                        name,
                        "sim",
                        avg_via=stats.avg_via,
                        avg_energy=stats.avg_energy,
                        std_err=stats.via_std_error,
                    )
                )
            except Exception as e:
                rows.append(_row(params, name, "sim", error=_error_text(e)))
    return rows


def run_sweep(config: ExperimentConfig) -> str:
    """Evaluate every grid point and write metrics.csv in config order."""
    grid = config.grid()
    results: Dict[int, List[Dict[str, Any]]] = {}

    if config.jobs > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as executor:
            future_to_index = {
                executor.submit(evaluate_point, params, config.policies, config.solver, config.simulation): i
                for i, params in enumerate(grid)
            }
            for future in as_completed(future_to_index):
                i = future_to_index[future]
                try:
                    results[i] = future.result()
                except Exception as e:
                    logger.error("grid point %d failed unexpectedly: %s", i, e)
                    results[i] = [
                        _row(grid[i], name, "exact", error=_error_text(e)) for name in config.policies
                    ]
    else:
        for i, params in enumerate(grid):
            results[i] = evaluate_point(params, config.policies, config.solver, config.simulation)

    rows = [row for i in range(len(grid)) for row in results[i]]
    run_logger = get_logger()
    if run_logger:
        run_logger.log_step("SWEEP", f"{len(grid)} grid points, {len(rows)} rows")
        for row in rows:
            run_logger.log_metrics(row)
    return write_metrics_table(os.path.join(config.output.out_dir, "metrics.csv"), rows)


def cmd_sweep(args):
    """Run the configured parameter sweep."""
    config = load_config_or_exit(args)
    setup_logging(args, "sweep", config, args.config)

    path = run_sweep(config)
    print(f"Grid points: {len(config.grid())}")
    print(f"Metrics written to: {path}")

    run_logger = get_logger()
    if run_logger:
        run_logger.log_final_result(True, {"metrics": path})
