"""System model: parameters, dynamics primitives and the MDP kernel."""

from .params import IDLE, TRANSMIT, State, SystemParams, check_action
from .dynamics import battery_step, source_transition_prob, via_step
from .kernel import (
    KernelReport,
    TransitionRow,
    enumerate_states,
    kernel_matrices,
    state_index,
    transition_kernel,
    validate_kernel,
)

__all__ = [
    "IDLE",
    "TRANSMIT",
    "State",
    "SystemParams",
    "check_action",
    "battery_step",
    "source_transition_prob",
    "via_step",
    "KernelReport",
    "TransitionRow",
    "enumerate_states",
    "kernel_matrices",
    "state_index",
    "transition_kernel",
    "validate_kernel",
]
