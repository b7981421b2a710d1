"""CLI helper functions."""

import logging
import os
import sys
from datetime import datetime
from typing import Optional

from dotenv import load_dotenv

from ..config import ConfigError, ExperimentConfig, load_experiment_config, validate_config
from ..workflow_logger import (
    StructuredLogger,
    WorkflowLogger,
    set_logger,
    set_structured_logger,
)


def load_env_files():
    """Load .env from multiple locations (first found wins for each var)."""
    # Priority: cwd > ~/.config/viasched/.env > ~/.viasched.env
    load_dotenv()

    config_dir = os.path.expanduser("~/.config/viasched/.env")
    if os.path.exists(config_dir):
        load_dotenv(config_dir)

    home_env = os.path.expanduser("~/.viasched.env")
    if os.path.exists(home_env):
        load_dotenv(home_env)


def fail(message: str, code: int = 1):
    """Print an error and exit."""
    print(f"Error: {message}", file=sys.stderr)
    sys.exit(code)


def build_config(args) -> ExperimentConfig:
    """Load the config file (if any) and apply flag overrides.

    Flags win over the file, the file over environment defaults.
    """
    path = getattr(args, "config", None)
    config = load_experiment_config(path) if path else ExperimentConfig()

    if getattr(args, "out", None):
        config.output.out_dir = args.out
    if getattr(args, "seed", None) is not None:
        config.simulation.seed = args.seed
    if getattr(args, "horizon", None) is not None:
        config.simulation.horizon = args.horizon
    if getattr(args, "burn_in", None) is not None:
        config.simulation.burn_in = args.burn_in
    if getattr(args, "jobs", None) is not None:
        config.jobs = args.jobs
    if getattr(args, "epsilon", None) is not None:
        config.solver.epsilon = args.epsilon

    validate_config(config)
    return config


def load_config_or_exit(args) -> ExperimentConfig:
    try:
        return build_config(args)
    except ConfigError as e:
        fail(str(e))


def setup_logging(args, command: str, config: ExperimentConfig, config_path: Optional[str] = None):
    """Configure stdlib logging and the optional run loggers."""
    verbose = getattr(args, "verbose", False)
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s [%(levelname)s] %(message)s",
        datefmt="%H:%M:%S",
    )

    if getattr(args, "log", None):
        logger = WorkflowLogger(args.log)
        set_logger(logger)
        logger.log_config(
            command,
            config_path,
            len(config.grid()),
            config.policies,
            config.solver,
            config.simulation,
        )
        if verbose:
            print(f"Logging to: {args.log}")

    if getattr(args, "with_logs", False):
        timestamp = datetime.now().strftime("%m_%d-%Hh%M%S")
        logs_dir = f"logs/log_{timestamp}"
        set_structured_logger(StructuredLogger(logs_dir))
        if verbose:
            print(f"Structured logs directory: {logs_dir}")
