"""Presets command - list the shipped experiment files."""

import os

import yaml

from ..completers import list_presets


def cmd_presets(args):
    """List experiment presets with their first comment line."""
    presets = list_presets(args.dir)
    if not presets:
        print(f"No presets found in {args.dir}/")
        return

    print(f"Presets in {args.dir}/:")
    for path in presets:
        description = ""
        with open(path, "r") as f:
            first = f.readline().strip()
            if first.startswith("#"):
                description = first.lstrip("# ")
        print(f"  {os.path.basename(path):<32} {description}")
        if args.verbose:
            with open(path, "r") as f:
                data = yaml.safe_load(f) or {}
            sweep = data.get("sweep") or {}
            axes = ", ".join(f"{k}[{len(v)}]" for k, v in sweep.items() if v) or "single point"
            print(f"    sweep: {axes}; policies: {', '.join(data.get('policies', [])) or 'all'}")

