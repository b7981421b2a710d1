"""CLI entry point for the VIA scheduler."""
# PYTHON_ARGCOMPLETE_OK

import argparse
import sys

import argcomplete

from ..config import POLICY_NAMES
from .commands import cmd_presets, cmd_simulate, cmd_solve, cmd_sweep, cmd_trace, cmd_verify
from .completers import PRESETS_DIR, ConfigCompleter, PolicyCompleter
from .helpers import load_env_files

# Load environment variables from .env file(s)
load_env_files()


def _add_common_arguments(parser: argparse.ArgumentParser):
    """Flags shared by every experiment command; each mirrors a config key."""
    parser.add_argument(
        "--config", "-c", help="Experiment file (YAML or JSON); see 'viasched presets'"
    ).completer = ConfigCompleter()
    parser.add_argument("--out", "-o", help="Output directory (output.out_dir)")
    parser.add_argument("--seed", type=int, help="Simulation seed (simulation.seed)")
    parser.add_argument("--horizon", type=int, help="Simulated slots (simulation.horizon)")
    parser.add_argument("--burn-in", type=int, help="Slots excluded from averages (simulation.burn_in)")
    parser.add_argument("--jobs", "-j", type=int, help="Parallel worker processes (jobs)")
    parser.add_argument("--epsilon", type=float, help="RVI span tolerance (solver.epsilon)")
    parser.add_argument(
        "--log", "-l", help="Path to log file for detailed run logging"
    )
    parser.add_argument(
        "--with-logs",
        action="store_true",
        help="Create structured logs in logs/log_<timestamp>/ with solver summaries and check results",
    )
    parser.add_argument(
        "--verbose", "-v", action="store_true", help="Verbose output"
    )


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="viasched",
        description="Average-VIA transmission scheduling for an energy-harvesting sensor",
    )

    subparsers = parser.add_subparsers(dest="command", help="Commands")

    # solve command
    solve_parser = subparsers.add_parser(
        "solve", help="Solve for the optimal policy and write the policy grid"
    )
    _add_common_arguments(solve_parser)

    # sweep command
    sweep_parser = subparsers.add_parser(
        "sweep", help="Exact (and simulated) metrics over a parameter grid"
    )
    _add_common_arguments(sweep_parser)

    # verify command
    verify_parser = subparsers.add_parser(
        "verify", help="Run the verification checks over a parameter grid"
    )
    _add_common_arguments(verify_parser)
    verify_parser.add_argument(
        "--policy-grid",
        help="Policy grid CSV (e,x,delta,action) checked instead of the solved policy",
    )

    # simulate command
    simulate_parser = subparsers.add_parser(
        "simulate", help="Monte Carlo runs at the base parameters"
    )
    _add_common_arguments(simulate_parser)
    simulate_parser.add_argument(
        "--policy",
        "-p",
        action="append",
        choices=POLICY_NAMES,
        help="Policy to simulate (repeatable; default: the config's policies)",
    ).completer = PolicyCompleter()
    simulate_parser.add_argument(
        "--replications", "-r", type=int, default=1, help="Independent seeds per policy (default: 1)"
    )

    # trace command
    trace_parser = subparsers.add_parser(
        "trace", help="Write a per-slot trace of a short run"
    )
    _add_common_arguments(trace_parser)
    trace_parser.add_argument(
        "--policy",
        "-p",
        default="optimal",
        choices=POLICY_NAMES,
        help="Policy to trace (default: optimal)",
    ).completer = PolicyCompleter()

    # presets command
    presets_parser = subparsers.add_parser(
        "presets", help="List the shipped experiment files"
    )
    presets_parser.add_argument(
        "--dir", default=PRESETS_DIR, help=f"Presets directory (default: {PRESETS_DIR})"
    )
    presets_parser.add_argument(
        "--verbose", "-v", action="store_true", help="Show sweep axes and policies"
    )

    # Enable argcomplete
    argcomplete.autocomplete(parser)

    args = parser.parse_args(argv)

    if args.command == "solve":
        cmd_solve(args)
    elif args.command == "sweep":
        cmd_sweep(args)
    elif args.command == "verify":
        cmd_verify(args)
    elif args.command == "simulate":
        cmd_simulate(args)
    elif args.command == "trace":
        cmd_trace(args)
    elif args.command == "presets":
        cmd_presets(args)
    else:
        parser.print_help()
        sys.exit(1)


if __name__ == "__main__":
    main()
