"""Model parameters, states and actions."""

from dataclasses import dataclass
from typing import NamedTuple

IDLE = 0
TRANSMIT = 1


@dataclass(frozen=True)
class SystemParams:
    """Scalar parameters of the sensor/source/channel system."""

    p: float  # source flip 0 -> 1
    q: float  # source flip 1 -> 0
    beta: float  # energy arrival rate
    p_s: float  # channel success probability
    e_max: int = 10
    delta_max: int = 10
    p_alpha: float = 0.5  # RS baseline transmit probability

    def __post_init__(self):
        problems = []
        for name in ("p", "q", "beta"):
            value = getattr(self, name)
            if not 0.0 < value < 1.0:
                problems.append(f"{name}={value!r} must lie in (0, 1)")
        for name in ("p_s", "p_alpha"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                problems.append(f"{name}={value!r} must lie in [0, 1]")
        if int(self.e_max) != self.e_max or self.e_max < 0:
            problems.append(f"e_max={self.e_max!r} must be a nonnegative integer")
        if int(self.delta_max) != self.delta_max or self.delta_max < 1:
            problems.append(f"delta_max={self.delta_max!r} must be a positive integer")
        if problems:
            raise ValueError("Invalid SystemParams: " + "; ".join(problems))

    @property
    def p_f(self) -> float:
        """Channel failure probability."""
        return 1.0 - self.p_s

    @property
    def num_states(self) -> int:
        return (self.e_max + 1) * 2 * (self.delta_max + 1)

    def source_stationary(self) -> tuple:
        """Stationary law (P[X=0], P[X=1]) of the two-state source."""
        total = self.p + self.q
        return self.q / total, self.p / total

    def replace(self, **changes) -> "SystemParams":
        values = {
            "p": self.p,
            "q": self.q,
            "beta": self.beta,
            "p_s": self.p_s,
            "e_max": self.e_max,
            "delta_max": self.delta_max,
            "p_alpha": self.p_alpha,
        }
        values.update(changes)
        return SystemParams(**values)


class State(NamedTuple):
    """A point (e, X, Delta) of the state space."""

    e: int
    x: int
    delta: int

    def in_bounds(self, params: SystemParams) -> bool:
        return (
            0 <= self.e <= params.e_max
            and self.x in (0, 1)
            and 0 <= self.delta <= params.delta_max
        )


def check_action(a: int) -> int:
    """Return a as an int, rejecting anything outside {0, 1}."""
    if a not in (IDLE, TRANSMIT):
        raise ValueError(f"action must be 0 or 1, got {a!r}")
    return int(a)
