"""Trace command - per-slot records of a short run."""

import os
from dataclasses import replace

from ...config import ExperimentConfig
from ...policies import make_policy
from ...simulate import trace
from ...solver import ConvergenceError, relative_value_iteration
from ...utils import write_trace
from ...workflow_logger import get_logger
from ..helpers import fail, load_config_or_exit, setup_logging

DEFAULT_TRACE_HORIZON = 1000


def run_trace(config: ExperimentConfig, policy_name: str) -> str:
    """Write trace.csv for one policy at config.params."""
    params = config.params
    sim_config = replace(config.simulation, record_trace=True)
    if sim_config.horizon == 0:
        sim_config = replace(sim_config, horizon=DEFAULT_TRACE_HORIZON)
    # traces keep every slot
    sim_config = replace(sim_config, burn_in=0)

    actions = relative_value_iteration(params, config.solver).policy if policy_name == "optimal" else None
    records = trace(make_policy(policy_name, params, actions), params, sim_config)

    logger = get_logger()
    if logger:
        logger.log_step("TRACE", f"policy={policy_name} horizon={sim_config.horizon} seed={sim_config.seed}")
    return write_trace(os.path.join(config.output.out_dir, "trace.csv"), records)


def cmd_trace(args):
    """Record a per-slot trace."""
    config = load_config_or_exit(args)
    setup_logging(args, "trace", config, args.config)

    try:
        path = run_trace(config, args.policy)
    except ConvergenceError as e:
        fail(str(e), code=2)
    except ValueError as e:
        fail(str(e))

    print(f"Trace written to: {path}")
    logger = get_logger()
    if logger:
        logger.log_final_result(True, {"trace": path})
