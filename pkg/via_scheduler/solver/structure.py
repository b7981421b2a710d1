"""Structural checks on solved policies and value tables."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..model import IDLE, TRANSMIT, State, SystemParams, state_index
from .rvi import action_values

MONOTONE_TOLERANCE = 1e-9


@dataclass
class Violation:
    """One breach of the threshold structure."""

    rule: str  # "delta-monotone" | "battery-monotone" | "idle-when-empty" | "idle-when-fresh"
    state: State
    detail: str = ""

    def to_dict(self) -> dict:
        return {"rule": self.rule, "state": list(self.state), "detail": self.detail}


@dataclass
class ThresholdReport:
    """Per-(e, x) transmit thresholds and every structural violation found."""

    thresholds: Dict[Tuple[int, int], Optional[int]] = field(default_factory=dict)
    violations: List[Violation] = field(default_factory=list)
    idle_when_empty: bool = True
    idle_when_fresh: bool = True

    @property
    def ok(self) -> bool:
        return not self.violations

    def threshold(self, e: int, x: int) -> Optional[int]:
        return self.thresholds.get((e, x))


def threshold_report(policy: np.ndarray, params: SystemParams) -> ThresholdReport:
    """Check a deterministic action table for threshold form.

    Rules: transmit at (e, x, d) implies transmit at every larger d and every
    larger e; never transmit with an empty battery; never transmit at d = 0.
    """
    policy = np.asarray(policy)
    E, D = params.e_max, params.delta_max

    def act(e, x, d):
        return int(policy[state_index(State(e, x, d), params)])

    report = ThresholdReport()
    for e in range(E + 1):
        for x in (0, 1):
            transmit_at = [d for d in range(D + 1) if act(e, x, d) == TRANSMIT]
            report.thresholds[(e, x)] = transmit_at[0] if transmit_at else None

            if e == 0 and transmit_at:
                report.idle_when_empty = False
                for d in transmit_at:
                    report.violations.append(Violation("idle-when-empty", State(e, x, d)))
            if act(e, x, 0) == TRANSMIT and e > 0:
                report.idle_when_fresh = False
                report.violations.append(Violation("idle-when-fresh", State(e, x, 0)))

            if transmit_at:
                for d in range(transmit_at[0] + 1, D + 1):
                    if act(e, x, d) == IDLE:
                        report.violations.append(
                            Violation(
                                "delta-monotone",
                                State(e, x, d),
                                f"idle above transmit at delta={transmit_at[0]}",
                            )
                        )
            for d in transmit_at:
                for e_hi in range(e + 1, E + 1):
                    if act(e_hi, x, d) == IDLE:
                        report.violations.append(
                            Violation(
                                "battery-monotone",
                                State(e_hi, x, d),
                                f"idle while e={e} transmits",
                            )
                        )
    return report


@dataclass
class DeltaVProfile:
    """Action-value gaps Delta V(s) = V^1(s) - V^0(s) and their monotonicity in Delta."""

    params: SystemParams
    v0: np.ndarray
    v1: np.ndarray
    delta_v: np.ndarray
    monotone: Dict[Tuple[int, int], bool] = field(default_factory=dict)

    @property
    def flags(self) -> List[Tuple[int, int]]:
        """(e, x) pairs where Delta V increases somewhere in Delta."""
        return [key for key, ok in sorted(self.monotone.items()) if not ok]

    def at(self, s: State) -> float:
        return float(self.delta_v[state_index(s, self.params)])


def delta_v_profile(
    v: np.ndarray,
    params: SystemParams,
    tolerance: float = MONOTONE_TOLERANCE,
) -> DeltaVProfile:
    """Compute Delta V through the kernel and test it is nonincreasing in Delta.

    Consecutive pairs (d, d+1) are compared with both ends in
    [1, delta_max - 1]; the clamp at delta_max is left out.
    """
    v0, v1 = action_values(np.asarray(v, dtype=float), params)
    delta_v = v1 - v0
    profile = DeltaVProfile(params=params, v0=v0, v1=v1, delta_v=delta_v)

    for e in range(params.e_max + 1):
        for x in (0, 1):
            ok = True
            for d in range(1, params.delta_max - 1):
                here = delta_v[state_index(State(e, x, d), params)]
                nxt = delta_v[state_index(State(e, x, d + 1), params)]
                if nxt > here + tolerance:
                    ok = False
                    break
            profile.monotone[(e, x)] = ok
    return profile
