"""Configuration for VIA scheduler experiments."""

import itertools
import os
from dataclasses import dataclass, field, fields
from typing import Any, Dict, Iterator, List, Optional, Tuple

import yaml

from .model import SystemParams

POLICY_NAMES = ("optimal", "rs", "greedy")
SWEEP_AXES = ("p", "q", "beta", "p_s")


class ConfigError(ValueError):
    """Invalid or inconsistent experiment configuration."""


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name, "")
    return int(raw) if raw.strip() else default


@dataclass
class SolverConfig:
    """Relative value iteration settings."""

    epsilon: float = 1e-9
    max_iters: int = 1_000_000
    reference: Tuple[int, int, int] = (0, 0, 0)
    tie_tolerance: float = 1e-12


@dataclass
class SimConfig:
    """Monte Carlo run settings."""

    horizon: int = 0
    seed: int = field(default_factory=lambda: _env_int("VIASCHED_SEED", 1))
    burn_in: int = 10_000
    record_trace: bool = False

    def validate(self):
        """Raise ValueError unless horizon >= 1 and burn_in < horizon."""
        if self.horizon < 1:
            raise ValueError(f"horizon must be >= 1, got {self.horizon}")
        if not 0 <= self.burn_in < self.horizon:
            raise ValueError(
                f"burn_in must satisfy 0 <= burn_in < horizon, got {self.burn_in} (horizon {self.horizon})"
            )


@dataclass
class SweepAxes:
    """Lists of values to sweep; None keeps the base parameter."""

    p: Optional[List[float]] = None
    q: Optional[List[float]] = None
    beta: Optional[List[float]] = None
    p_s: Optional[List[float]] = None

    def combinations(self, base: SystemParams) -> Iterator[SystemParams]:
        """Cartesian product in axis order p, q, beta, p_s (last axis fastest)."""
        axes = [getattr(self, name) or [getattr(base, name)] for name in SWEEP_AXES]
        for values in itertools.product(*axes):
            yield base.replace(**dict(zip(SWEEP_AXES, values)))


@dataclass
class OutputConfig:
    """Where result files go."""

    out_dir: str = field(default_factory=lambda: os.getenv("VIASCHED_OUT_DIR", "results"))


@dataclass
class ExperimentConfig:
    """Main experiment configuration."""

    params: SystemParams = field(
        default_factory=lambda: SystemParams(p=0.4, q=0.7, beta=0.2, p_s=0.5)
    )
    sweep: SweepAxes = field(default_factory=SweepAxes)
    policies: List[str] = field(default_factory=lambda: list(POLICY_NAMES))
    solver: SolverConfig = field(default_factory=SolverConfig)
    simulation: SimConfig = field(default_factory=SimConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    jobs: int = field(default_factory=lambda: _env_int("VIASCHED_JOBS", 1))

    def grid(self) -> List[SystemParams]:
        return list(self.sweep.combinations(self.params))


def _section(data: Dict[str, Any], cls, section: str) -> Dict[str, Any]:
    """Check a config section's keys against a dataclass and return it."""
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"section '{section}' must be a mapping")
    allowed = {f.name for f in fields(cls)}
    unknown = sorted(set(data) - allowed)
    if unknown:
        raise ConfigError(f"unknown key(s) in '{section}': {', '.join(unknown)}")
    return dict(data)


def config_from_dict(data: Dict[str, Any]) -> ExperimentConfig:
    """Build and validate an ExperimentConfig from parsed YAML/JSON."""
    data = data or {}
    allowed = {f.name for f in fields(ExperimentConfig)}
    unknown = sorted(set(data) - allowed)
    if unknown:
        raise ConfigError(f"unknown top-level key(s): {', '.join(unknown)}")

    config = ExperimentConfig()
    try:
        if "params" in data:
            config.params = SystemParams(**_section(data["params"], SystemParams, "params"))
    except (TypeError, ValueError) as e:
        raise ConfigError(f"params: {e}") from e

    sweep = _section(data.get("sweep"), SweepAxes, "sweep")
    for name, values in sweep.items():
        if values is None:
            continue
        if not isinstance(values, list) or not values:
            raise ConfigError(f"sweep axis '{name}' must be a non-empty list")
        sweep[name] = [float(v) for v in values]
    config.sweep = SweepAxes(**sweep)

    if "policies" in data:
        policies = data["policies"]
        if not isinstance(policies, list) or not policies:
            raise ConfigError("policies must be a non-empty list")
        bad = [p for p in policies if p not in POLICY_NAMES]
        if bad:
            raise ConfigError(f"unknown policies {bad}; choose from {list(POLICY_NAMES)}")
        config.policies = list(policies)

    solver = _section(data.get("solver"), SolverConfig, "solver")
    if "reference" in solver:
        solver["reference"] = tuple(int(v) for v in solver["reference"])
    # PyYAML reads "1e-9" (no dot) as a string
    for name in ("epsilon", "tie_tolerance"):
        if name in solver:
            solver[name] = float(solver[name])
    config.solver = SolverConfig(**solver)

    config.simulation = SimConfig(**_section(data.get("simulation"), SimConfig, "simulation"))
    config.output = OutputConfig(**_section(data.get("output"), OutputConfig, "output"))
    if "jobs" in data:
        config.jobs = int(data["jobs"])

    validate_config(config)
    return config


def validate_config(config: ExperimentConfig):
    """Check every sweep combination and the scalar settings."""
    try:
        grid = config.grid()
    except ValueError as e:
        raise ConfigError(f"sweep produces an invalid parameter set: {e}") from e
    if not grid:
        raise ConfigError("sweep produces no parameter combinations")
    reference = config.solver.reference
    if len(reference) != 3:
        raise ConfigError(f"solver.reference must have three components, got {reference}")
    if config.solver.epsilon <= 0:
        raise ConfigError("solver.epsilon must be positive")
    if config.simulation.horizon < 0:
        raise ConfigError("simulation.horizon must be >= 0")
    if config.simulation.horizon and config.simulation.burn_in >= config.simulation.horizon:
        raise ConfigError("simulation.burn_in must be smaller than simulation.horizon")
    if config.jobs < 1:
        raise ConfigError("jobs must be >= 1")


def load_experiment_config(path: str) -> ExperimentConfig:
    """Load an experiment file (YAML, or JSON since it is a YAML subset)."""
    if not os.path.exists(path):
        raise ConfigError(f"config file not found: {path}")
    with open(path, "r") as f:
        try:
            data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigError(f"cannot parse {path}: {e}") from e
    if data is not None and not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be a mapping")
    return config_from_dict(data or {})
