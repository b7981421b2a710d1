"""Stationary transmission policies: the optimal table and the two baselines."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .model import IDLE, TRANSMIT, State, SystemParams, enumerate_states, state_index


class Policy(ABC):
    """Memoryless stationary policy over (e, x, delta)."""

    name: str = "policy"
    deterministic: bool = True

    @abstractmethod
    def _transmit_probability(self, s: State) -> float:
        """Transmit probability for a state with a nonempty battery."""

    def action_distribution(self, s: State) -> float:
        if s.e == 0:
            return 0.0
        return self._transmit_probability(s)

    def decide(self, s: State, u: float) -> int:
        return TRANSMIT if u < self.action_distribution(s) else IDLE

    def transmit_probabilities(self, params: SystemParams) -> np.ndarray:
        """action_distribution over the canonical state ordering."""
        return np.array([self.action_distribution(s) for s in enumerate_states(params)])


@dataclass(frozen=True, eq=False)
class OptimalTable(Policy):
    """Deterministic action table indexed by the canonical ordering."""

    actions: np.ndarray
    params: SystemParams
    name: str = "optimal"

    def __post_init__(self):
        actions = np.asarray(self.actions, dtype=np.int8)
        if actions.shape != (self.params.num_states,):
            raise ValueError(
                f"action table has shape {actions.shape}, expected ({self.params.num_states},)"
            )
        if not np.isin(actions, (IDLE, TRANSMIT)).all():
            raise ValueError("action table entries must be 0 or 1")
        object.__setattr__(self, "actions", actions)

    def _transmit_probability(self, s: State) -> float:
        return float(self.actions[state_index(s, self.params)])


@dataclass(frozen=True)
class RandomizedStationary(Policy):
    """Transmit with probability p_alpha whenever the battery is nonempty."""

    p_alpha: float = 0.5
    name: str = "rs"

    def __post_init__(self):
        if not 0.0 <= self.p_alpha <= 1.0:
            raise ValueError(f"p_alpha must lie in [0, 1], got {self.p_alpha!r}")

    @property
    def deterministic(self) -> bool:
        return self.p_alpha in (0.0, 1.0)

    def _transmit_probability(self, s: State) -> float:
        return self.p_alpha


@dataclass(frozen=True)
class Greedy(Policy):
    """Transmit whenever the battery is nonempty."""

    name: str = "greedy"

    def _transmit_probability(self, s: State) -> float:
        return 1.0


def action_distribution(policy: Policy, s: State) -> float:
    """Probability that policy transmits in state s (0 whenever s.e == 0)."""
    return policy.action_distribution(s)


def decide(policy: Policy, s: State, u: float) -> int:
    """Sample an action from policy at s using the uniform draw u in [0, 1)."""
    return policy.decide(s, u)


def make_policy(name: str, params: SystemParams, actions: Optional[np.ndarray] = None) -> Policy:
    """Create a policy by config name ("optimal", "rs", "greedy")."""
    if name == "optimal":
        if actions is None:
            raise ValueError("the optimal policy needs an action table")
        return OptimalTable(actions=actions, params=params)
    if name == "rs":
        return RandomizedStationary(p_alpha=params.p_alpha)
    if name == "greedy":
        return Greedy()
    raise ValueError(f"unknown policy '{name}'")
