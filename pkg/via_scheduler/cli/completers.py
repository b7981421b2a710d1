"""Argcomplete completers for CLI."""

import glob
import os

from ..config import POLICY_NAMES

PRESETS_DIR = "experiment_configs"


def list_presets(presets_dir: str = PRESETS_DIR):
    """Experiment files shipped in the presets directory."""
    patterns = ("*.yaml", "*.yml", "*.json")
    found = []
    for pattern in patterns:
        found.extend(glob.glob(os.path.join(presets_dir, pattern)))
    return sorted(found)


class ConfigCompleter:
    """Completer for experiment config paths (presets first)."""

    def __call__(self, prefix, parsed_args, **kwargs):
        candidates = list_presets() + glob.glob(prefix + "*")
        return sorted({c for c in candidates if c.startswith(prefix)})


class PolicyCompleter:
    """Completer for policy names."""

    def __call__(self, prefix, parsed_args, **kwargs):
        return [p for p in POLICY_NAMES if p.startswith(prefix)]
