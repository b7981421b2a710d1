"""Verification workflow: kernel, solver, structure, baselines, oracle and simulation checks."""

from .graph import create_verify_workflow, initial_state, verify_point
from .state import VerifyState

__all__ = ["create_verify_workflow", "initial_state", "verify_point", "VerifyState"]
