"""Simulate command - Monte Carlo runs at the base parameters, next to exact values."""

import math
import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import replace
from typing import Any, Dict, List, Tuple

import numpy as np

from ...config import ExperimentConfig
from ...evaluate import exact_metrics
from ...policies import make_policy
from ...simulate import SimStats, replication_seeds, simulate
from ...solver import ConvergenceError, relative_value_iteration
from ...utils import write_metrics_table, write_simulation_table
from ...workflow_logger import get_logger
from ..helpers import fail, load_config_or_exit, setup_logging

DEFAULT_HORIZON = 1_000_000


def _pooled(stats: List[SimStats]) -> Dict[str, Any]:
    """Mean over replications; the standard error is the spread of replication means."""
    if len(stats) == 1:
        only = stats[0]
        return {
            "slot_count": only.slot_count,
            "avg_via": only.avg_via,
            "avg_energy": only.avg_energy,
            "via_std_error": only.via_std_error,
            "energy_std_error": only.energy_std_error,
        }
    vias = np.array([s.avg_via for s in stats])
    energies = np.array([s.avg_energy for s in stats])
    root = math.sqrt(len(stats))
    return {
        "slot_count": sum(s.slot_count for s in stats),
        "avg_via": float(vias.mean()),
        "avg_energy": float(energies.mean()),
        "via_std_error": float(vias.std(ddof=1) / root),
        "energy_std_error": float(energies.std(ddof=1) / root),
    }


def run_simulate(
    config: ExperimentConfig,
    policies: List[str],
    replications: int = 1,
) -> Dict[str, str]:
    """Simulate each policy at config.params for `replications` seeds.

    Writes simulation.csv (one row per replication plus a pooled row per
    policy) and simulate_metrics.csv (exact and pooled sim rows in the
    metrics schema).
    """
    if replications < 1:
        raise ValueError(f"replications must be >= 1, got {replications}")
    params = config.params
    sim_config = config.simulation
    if sim_config.horizon == 0:
        sim_config = replace(sim_config, horizon=DEFAULT_HORIZON)
    sim_config.validate()

    actions = None
    if "optimal" in policies:
        actions = relative_value_iteration(params, config.solver).policy
    resolved = {name: make_policy(name, params, actions) for name in policies}

    seeds = [sim_config.seed] if replications == 1 else replication_seeds(sim_config.seed, replications)
    tasks: List[Tuple[str, int]] = [(name, seed) for name in policies for seed in seeds]
    results: Dict[Tuple[str, int], SimStats] = {}

    if config.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as executor:
            future_to_task = {
                executor.submit(simulate, resolved[name], params, replace(sim_config, seed=seed)): (name, seed)
                for name, seed in tasks
            }
            for future in as_completed(future_to_task):
                results[future_to_task[future]] = future.result()
    else:
        for name, seed in tasks:
            results[(name, seed)] = simulate(resolved[name], params, replace(sim_config, seed=seed))

    sim_rows = []
    metric_rows = []
    logger = get_logger()
    for name in policies:
        exact = exact_metrics(resolved[name], params)
        stats = [results[(name, seed)] for seed in seeds]
        for s in stats:
            sim_rows.append(
                {
                    "policy": name,
                    **s.to_dict(),
                    "exact_avg_via": exact.avg_via,
                    "exact_avg_energy": exact.avg_energy,
                }
            )
        pooled = _pooled(stats)
        if replications > 1:
            sim_rows.append(
                {
                    "policy": name,
                    "seed": None,
                    **pooled,
                    "exact_avg_via": exact.avg_via,
                    "exact_avg_energy": exact.avg_energy,
                }
            )

        base = {"p": params.p, "q": params.q, "beta": params.beta, "p_s": params.p_s, "policy": name}
        metric_rows.append({**base, "method": "exact", "avg_via": exact.avg_via, "avg_energy": exact.avg_energy})
        metric_rows.append(
            {
                **base,
                "method": "sim",
                "avg_via": pooled["avg_via"],
                "avg_energy": pooled["avg_energy"],
                "std_err": pooled["via_std_error"],
            }
        )

    if logger:
        logger.log_step("SIMULATE", f"horizon={sim_config.horizon} replications={replications}")
        for row in metric_rows:
            logger.log_metrics(row)

    out_dir = config.output.out_dir
    return {
        "simulation": write_simulation_table(os.path.join(out_dir, "simulation.csv"), sim_rows),
        "metrics": write_metrics_table(os.path.join(out_dir, "simulate_metrics.csv"), metric_rows),
    }


def cmd_simulate(args):
    """Simulate the configured policies at the base parameters."""
    config = load_config_or_exit(args)
    setup_logging(args, "simulate", config, args.config)
    policies = args.policy or config.policies

    try:
        outputs = run_simulate(config, policies, args.replications)
    except ConvergenceError as e:
        fail(str(e), code=2)
    except ValueError as e:
        fail(str(e))

    for name, path in outputs.items():
        print(f"  {name}: {path}")

    logger = get_logger()
    if logger:
        logger.log_final_result(True, outputs)
