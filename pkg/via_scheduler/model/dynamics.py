"""Per-slot dynamics primitives: source chain, VIA recursion, battery recursion."""

from .params import IDLE, TRANSMIT, SystemParams


def source_transition_prob(x: int, x_next: int, params: SystemParams) -> float:
    """Pr[X_{t+1} = x_next | X_t = x] for the two-state source."""
    if x not in (0, 1) or x_next not in (0, 1):
        raise ValueError(f"source states must be 0 or 1, got ({x!r}, {x_next!r})")
    if x == 0:
        return params.p if x_next == 1 else 1.0 - params.p
    return params.q if x_next == 0 else 1.0 - params.q


def via_step(
    delta: int,
    source_changed: bool,
    a: int,
    h: bool,
    params: SystemParams,
) -> int:
    """Next VIA value.

    A successful transmission (a=1, h=1) leaves the receiver holding the
    pre-transition version: VIA is 0 if the source did not move and 1 if it
    did. Otherwise VIA grows by one on a source change, capped at delta_max.
    h is ignored when a=0.
    """
    if a == TRANSMIT and h:
        return 1 if source_changed else 0
    if source_changed:
        return min(delta + 1, params.delta_max)
    return delta


def battery_step(e: int, b: int, a: int, params: SystemParams) -> int:
    """Next battery level min(e + b - a, E_max).

    Transmitting from an empty battery is a contract violation; callers must
    coerce the action to idle first.
    """
    if e == 0 and a == TRANSMIT:
        raise ValueError("battery_step(e=0, a=1): cannot transmit from an empty battery")
    if a not in (IDLE, TRANSMIT):
        raise ValueError(f"action must be 0 or 1, got {a!r}")
    return min(e + b - a, params.e_max)
