"""Seeded uniform streams on a counter-based bit generator."""

import zlib
from typing import List

import numpy as np

DEFAULT_STREAM = "slots"
CHUNK = 65_536


def stream_seed(seed: int, name: str = DEFAULT_STREAM) -> np.random.SeedSequence:
    """SeedSequence for a named stream; distinct names give independent streams."""
    return np.random.SeedSequence(entropy=int(seed), spawn_key=(zlib.crc32(name.encode()),))


class UniformStream:
    """Sequential U[0, 1) draws from a Philox generator.

    Draws are produced in blocks but consumed one at a time, so the k-th call
    to next() returns the k-th double of the stream regardless of block size.
    """

    def __init__(self, seed_sequence: np.random.SeedSequence):
        self._seed_sequence = seed_sequence
        self._generator = np.random.Generator(np.random.Philox(seed_sequence))
        self._buffer: List[float] = []
        self._pos = 0
        self.draws = 0

    @classmethod
    def from_seed(cls, seed: int, name: str = DEFAULT_STREAM) -> "UniformStream":
        return cls(stream_seed(seed, name))

    def next(self) -> float:
        if self._pos >= len(self._buffer):
            self._buffer = self._generator.random(CHUNK).tolist()
            self._pos = 0
        u = self._buffer[self._pos]
        self._pos += 1
        self.draws += 1
        return u
