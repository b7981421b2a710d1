"""Verify command - run every verification check over the configured grid."""

import os
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Any, Dict, List, Optional

import numpy as np

from ...config import ExperimentConfig, SimConfig, SolverConfig
from ...model import SystemParams
from ...utils import params_to_dict, read_policy_grid, write_report
from ...verify import verify_point
from ...workflow_logger import (
    get_logger,
    get_structured_logger,
    set_logger,
    set_structured_logger,
)
from ..helpers import fail, load_config_or_exit, setup_logging


def _point_result(state: Dict[str, Any]) -> Dict[str, Any]:
    return {
        "params": params_to_dict(state["params"]),
        "status": state["status"],
        "checks": state["checks"],
        "error_message": state.get("error_message"),
    }


def _verify_worker(
    params: SystemParams,
    solver: SolverConfig,
    simulation: SimConfig,
    policies: List[str],
    policy_override: Optional[np.ndarray],
) -> Dict[str, Any]:
    # forked workers inherit the parent's loggers; only the parent writes
    set_logger(None)
    set_structured_logger(None)
    return _point_result(verify_point(params, solver, simulation, policies, policy_override))


def _log_point(point: Dict[str, Any]):
    logger = get_logger()
    structured_logger = get_structured_logger()
    for check in point["checks"]:
        if logger:
            logger.log_check(check)
        if structured_logger:
            structured_logger.log_check(check, point["params"])
    if logger and point["error_message"]:
        logger.log_error(point["error_message"])


def run_verify(config: ExperimentConfig, policy_grid: Optional[str] = None) -> Dict[str, Any]:
    """Verify every grid point and write verify_report.json.

    A stored policy grid (policy_grid) replaces the solved policy in the
    structure checks. It is read against config.params; sweeps never change
    e_max or delta_max, so one table fits every grid point.
    """
    grid = config.grid()
    override = None
    if policy_grid:
        override = read_policy_grid(policy_grid, config.params)

    args = (config.solver, config.simulation, config.policies, override)
    points: Dict[int, Dict[str, Any]] = {}
    if config.jobs > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as executor:
            future_to_index = {
                executor.submit(_verify_worker, params, *args): i for i, params in enumerate(grid)
            }
            for future in as_completed(future_to_index):
                i = future_to_index[future]
                try:
                    points[i] = future.result()
                except Exception as e:
                    points[i] = {
                        "params": params_to_dict(grid[i]),
                        "status": "error",
                        "checks": [],
                        "error_message": f"{type(e).__name__}: {e}",
                    }
        for i in range(len(grid)):
            _log_point(points[i])
    else:
        # in-process runs log from inside the graph nodes
        for i, params in enumerate(grid):
            points[i] = _point_result(verify_point(params, *args))

    ordered = [points[i] for i in range(len(grid))]
    checks = [check for point in ordered for check in point["checks"]]
    failed_checks = sum(1 for check in checks if not check["passed"])
    passed = all(point["status"] == "passed" for point in ordered)
    report = {
        "passed": passed,
        "points": ordered,
        "summary": {
            "points": len(ordered),
            "errors": sum(1 for point in ordered if point["status"] == "error"),
            "checks": len(checks),
            "failed_checks": failed_checks,
        },
        "policy_grid": policy_grid,
    }
    report["path"] = write_report(os.path.join(config.output.out_dir, "verify_report.json"), report)
    return report


def cmd_verify(args):
    """Run the verification checks; exit 1 when any check fails."""
    config = load_config_or_exit(args)
    setup_logging(args, "verify", config, args.config)

    try:
        report = run_verify(config, getattr(args, "policy_grid", None))
    except (OSError, ValueError) as e:
        fail(str(e))

    summary = report["summary"]
    print(f"Grid points: {summary['points']} (errors: {summary['errors']})")
    print(f"Checks: {summary['checks']} (failed: {summary['failed_checks']})")
    for point in report["points"]:
        for check in point["checks"]:
            if not check["passed"]:
                params = point["params"]
                label = f"p={params['p']} q={params['q']} beta={params['beta']} p_s={params['p_s']}"
                print(f"  FAIL {check['name']} at {label}: {check.get('detail', '')}")
        if point["error_message"]:
            print(f"  ERROR: {point['error_message']}")
    print(f"Report written to: {report['path']}")

    logger = get_logger()
    if logger:
        logger.log_final_result(report["passed"], {"report": report["path"]})
    structured_logger = get_structured_logger()
    if structured_logger:
        structured_logger.log_summary("verify", report["passed"], {"report": report["path"]})

    if not report["passed"]:
        print("Verification FAILED")
        sys.exit(1)
    print("Verification PASSED")
