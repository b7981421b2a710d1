"""CLI command implementations."""

from .solve import cmd_solve
from .sweep import cmd_sweep
from .verify import cmd_verify
from .simulate import cmd_simulate
from .trace import cmd_trace
from .presets import cmd_presets

__all__ = [
    "cmd_solve",
    "cmd_sweep",
    "cmd_verify",
    "cmd_simulate",
    "cmd_trace",
    "cmd_presets",
]
