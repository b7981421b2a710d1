"""Run logger - logs solver, evaluation and verification steps to file."""

import json
import os
from datetime import datetime
from typing import Any, Dict, Optional


class StructuredLogger:
    """Logs run artifacts to separate numbered files in a logs directory."""

    def __init__(self, logs_dir: str):
        """
        Initialize structured logger.

        Args:
            logs_dir: Directory to store log files
        """
        self.logs_dir = logs_dir
        self._step_counter = 0
        os.makedirs(self.logs_dir, exist_ok=True)

    def _next_index(self) -> int:
        self._step_counter += 1
        return self._step_counter

    def _dump(self, filename: str, data: Dict[str, Any]) -> str:
        filepath = os.path.join(self.logs_dir, filename)
        with open(filepath, "w") as f:
            json.dump(data, f, indent=2, sort_keys=True)
        return filepath

    def log_solution(self, summary: Dict[str, Any], params: Dict[str, Any], step: str) -> str:
        """
        Log a solver summary to a JSON file.

        Args:
            summary: Solution.summary() plus any cross-checks
            params: SystemParams as a dict
            step: Step name (solve, sweep, verify)

        Returns:
            Path to the created file
        """
        idx = self._next_index()
        return self._dump(
            f"{idx:03d}_{step}_solution.json",
            {
                "step": step,
                "timestamp": datetime.now().isoformat(),
                "params": params,
                "solution": summary,
            },
        )

    def log_check(self, check: Dict[str, Any], params: Dict[str, Any]) -> str:
        """
        Log one verification check; failing checks also get a plain text file.

        Args:
            check: Check record with at least 'name' and 'passed'
            params: SystemParams of the grid point

        Returns:
            Path to the created JSON file
        """
        idx = self._next_index()
        filepath = self._dump(
            f"{idx:03d}_check_{check['name']}.json",
            {
                "step": "verify",
                "timestamp": datetime.now().isoformat(),
                "params": params,
                "check": check,
            },
        )
        if not check.get("passed", False):
            self._log_check_failure(check, params)
        return filepath

    def _log_check_failure(self, check: Dict[str, Any], params: Dict[str, Any]) -> str:
        idx = self._next_index()
        filepath = os.path.join(self.logs_dir, f"{idx:03d}_check_{check['name']}_failed.txt")
        lines = [f"=== Check failed: {check['name']} ===", ""]
        lines.append("Parameters: " + ", ".join(f"{k}={v}" for k, v in params.items()))
        if "residual" in check:
            lines.append(f"Residual: {check['residual']}")
        for item in check.get("violations", []):
            lines.append(f"  - {item}")
        with open(filepath, "w") as f:
            f.write("\n".join(lines) + "\n")
        return filepath

    def log_summary(self, command: str, passed: bool, outputs: Dict[str, str]) -> str:
        """Log the final summary of a command run."""
        idx = self._next_index()
        return self._dump(
            f"{idx:03d}_summary.json",
            {
                "step": "summary",
                "timestamp": datetime.now().isoformat(),
                "command": command,
                "passed": passed,
                "outputs": outputs,
            },
        )


class WorkflowLogger:
    """Logs run execution details to a human-readable file."""

    def __init__(self, log_path: Optional[str] = None):
        """
        Initialize logger.

        Args:
            log_path: Path to log file. If None, logging is disabled.
        """
        self.log_path = log_path
        self._initialized = False

    def _ensure_initialized(self):
        """Create log file with header on first write."""
        if self._initialized or not self.log_path:
            return

        log_dir = os.path.dirname(self.log_path)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)

        with open(self.log_path, "w") as f:
            f.write("=" * 80 + "\n")
            f.write("VIA SCHEDULER - RUN LOG\n")
            f.write(f"Started: {datetime.now().isoformat()}\n")
            f.write("=" * 80 + "\n\n")

        self._initialized = True

    def _write(self, text: str):
        if not self.log_path:
            return
        self._ensure_initialized()
        with open(self.log_path, "a") as f:
            f.write(text)

    def log_config(self, command: str, config_path: Optional[str], grid_size: int, policies, solver, simulation):
        """Log the effective configuration."""
        self._write("CONFIGURATION\n")
        self._write("-" * 40 + "\n")
        self._write(f"Command: {command}\n")
        self._write(f"Config file: {config_path or '(defaults)'}\n")
        self._write(f"Grid points: {grid_size}\n")
        self._write(f"Policies: {', '.join(policies)}\n")
        self._write(f"Solver: epsilon={solver.epsilon} max_iters={solver.max_iters} reference={solver.reference}\n")
        self._write(
            f"Simulation: horizon={simulation.horizon} burn_in={simulation.burn_in} seed={simulation.seed}\n"
        )
        self._write("\n")

    def log_step(self, step_name: str, detail: str = ""):
        """Log a run step."""
        timestamp = datetime.now().strftime("%H:%M:%S")
        self._write(f"\n{'=' * 80}\n")
        self._write(f"[{timestamp}] STEP: {step_name}")
        if detail:
            self._write(f" ({detail})")
        self._write("\n")
        self._write("=" * 80 + "\n\n")

    def log_solution(self, summary: Dict[str, Any]):
        """Log solver output."""
        self._write(f"SOLVER: {'CONVERGED' if summary.get('converged') else 'NOT CONVERGED'}\n")
        self._write("-" * 40 + "\n")
        for key in sorted(summary):
            self._write(f"{key}: {summary[key]}\n")
        self._write("\n")

    def log_check(self, check: Dict[str, Any]):
        """Log a verification check result."""
        status = "PASS" if check.get("passed") else "FAIL"
        self._write(f"CHECK {check['name']}: {status}\n")
        if "residual" in check:
            self._write(f"  residual: {check['residual']}\n")
        violations = check.get("violations", [])
        for item in violations[:20]:
            self._write(f"  - {item}\n")
        if len(violations) > 20:
            self._write(f"  ... and {len(violations) - 20} more\n")

    def log_metrics(self, row: Dict[str, Any]):
        """Log one metrics row."""
        self._write(", ".join(f"{k}={v}" for k, v in row.items()) + "\n")

    def log_final_result(self, passed: bool, outputs: Dict[str, str]):
        """Log final result."""
        self._write("\n" + "=" * 80 + "\n")
        self._write("FINAL RESULT\n")
        self._write("=" * 80 + "\n")
        self._write(f"Status: {'SUCCESS' if passed else 'FAILED'}\n")
        for name, path in outputs.items():
            self._write(f"Output ({name}): {path}\n")
        self._write(f"Completed: {datetime.now().isoformat()}\n")

    def log_error(self, message: str):
        """Log an error message."""
        timestamp = datetime.now().strftime("%H:%M:%S")
        self._write(f"[{timestamp}] ERROR: {message}\n")


# Global logger instances - set by CLI
_logger: Optional[WorkflowLogger] = None
_structured_logger: Optional[StructuredLogger] = None


def get_logger() -> Optional[WorkflowLogger]:
    """Get the global workflow logger instance."""
    return _logger


def set_logger(logger: Optional[WorkflowLogger]):
    """Set the global workflow logger instance."""
    global _logger
    _logger = logger


def get_structured_logger() -> Optional[StructuredLogger]:
    """Get the global structured logger instance."""
    return _structured_logger


def set_structured_logger(logger: Optional[StructuredLogger]):
    """Set the global structured logger instance."""
    global _structured_logger
    _structured_logger = logger
