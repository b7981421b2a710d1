"""Slot-by-slot Monte Carlo simulation of the closed loop."""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Iterator, List, Optional, Tuple

import numpy as np

from ..config import SimConfig
from ..model import IDLE, State, SystemParams, battery_step, via_step
from ..policies import Policy, decide
from .rng import UniformStream

logger = logging.getLogger(__name__)

TRACE_MAX_HORIZON = 100_000
BATCHES = 100

# (t, e, x, delta, action, channel, arrival)
SlotRow = Tuple[int, int, int, int, int, Optional[int], int]


@dataclass
class SimStats:
    """Time averages over the slots after burn-in."""

    avg_via: float
    avg_energy: float
    via_std_error: float
    slot_count: int
    seed: int
    energy_std_error: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class TraceRecord:
    """One slot: the observed state, the action and the random outcomes."""

    t: int
    e: int
    x: int
    delta: int
    action: int
    channel: Optional[int]  # None when idle
    arrival: int


def _slots(policy: Policy, params: SystemParams, config: SimConfig) -> Iterator[SlotRow]:
    """Run the closed loop for config.horizon slots, yielding TraceRecord field tuples.

    Draw order per slot: action (only when the policy randomizes in this
    state), channel (only when transmitting), source, arrival. The very first
    draw of the stream sets X_1; the run starts from e = 0, delta = 0.
    """
    stream = UniformStream.from_seed(config.seed)
    probs = policy.transmit_probabilities(params).tolist()
    stride = params.delta_max + 1

    x = 0 if stream.next() < params.source_stationary()[0] else 1
    e, delta = 0, 0
    for t in range(1, config.horizon + 1):
        prob = probs[(e * 2 + x) * stride + delta] if e > 0 else 0.0
        u = stream.next() if 0.0 < prob < 1.0 else 0.0
        a = decide(policy, State(e, x, delta), u) if e > 0 else IDLE

        h = None
        if a:
            h = 1 if stream.next() < params.p_s else 0
        flip = params.p if x == 0 else params.q
        changed = stream.next() < flip
        b = 1 if stream.next() < params.beta else 0

        yield t, e, x, delta, a, h, b

        e = battery_step(e, b, a, params)
        delta = via_step(delta, changed, a, bool(h), params)
        if changed:
            x = 1 - x


def _batch_means(values: np.ndarray) -> Tuple[float, float]:
    """Mean and batch-means standard error."""
    n = len(values)
    mean = float(values.mean())
    batches = min(BATCHES, n)
    if batches < 2:
        return mean, 0.0
    size = n // batches
    means = values[: batches * size].reshape(batches, size).mean(axis=1)
    return mean, float(means.std(ddof=1) / math.sqrt(batches))


def simulate(policy: Policy, params: SystemParams, config: SimConfig) -> SimStats:
    """Average VIA and energy over slots after burn-in; deterministic given the seed."""
    config.validate()
    count = config.horizon - config.burn_in
    deltas = np.empty(count, dtype=np.int32)
    spent = np.empty(count, dtype=np.int8)
    for t, _, _, delta, a, _, _ in _slots(policy, params, config):
        if t > config.burn_in:
            i = t - config.burn_in - 1
            deltas[i] = delta
            spent[i] = a

    avg_via, via_se = _batch_means(deltas.astype(float))
    avg_energy, energy_se = _batch_means(spent.astype(float))
    stats = SimStats(
        avg_via=avg_via,
        avg_energy=avg_energy,
        via_std_error=via_se,
        slot_count=count,
        seed=config.seed,
        energy_std_error=energy_se,
    )
    logger.debug("simulated %s seed=%d: %s", getattr(policy, "name", "policy"), config.seed, stats)
    return stats


def trace(policy: Policy, params: SystemParams, config: SimConfig) -> List[TraceRecord]:
    """Per-slot records of a short run (at most 10^5 slots)."""
    config.validate()
    if not config.record_trace:
        raise ValueError("trace requires record_trace to be set")
    if config.horizon > TRACE_MAX_HORIZON:
        raise ValueError(
            f"trace horizon {config.horizon} exceeds the {TRACE_MAX_HORIZON}-slot limit"
        )
    return [TraceRecord(*row) for row in _slots(policy, params, config)]


def replication_seeds(seed: int, count: int) -> List[int]:
    """Distinct, reproducible seeds for independent replications."""
    return [int(s) for s in np.random.SeedSequence(seed).generate_state(count)]
