"""VIA-optimal transmission scheduling for energy-harvesting sensors."""

__version__ = "0.1.0"
