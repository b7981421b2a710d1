"""Monte Carlo simulation."""

from ..config import SimConfig
from .engine import (
    TRACE_MAX_HORIZON,
    SimStats,
    TraceRecord,
    replication_seeds,
    simulate,
    trace,
)
from .rng import UniformStream, stream_seed

__all__ = [
    "SimConfig",
    "TRACE_MAX_HORIZON",
    "SimStats",
    "TraceRecord",
    "replication_seeds",
    "simulate",
    "trace",
    "UniformStream",
    "stream_seed",
]
