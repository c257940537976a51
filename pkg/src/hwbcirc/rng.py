"""Seeded splitmix64 stream for reproducible sampled verification.

64-bit state, documented update, identical output on every platform.
"""
from __future__ import annotations

from typing import Iterator

_MASK = 0xFFFFFFFFFFFFFFFF


def splitmix64_stream(seed: int, count: int) -> Iterator[int]:
    state = seed & _MASK
    for _ in range(count):
        state = (state + 0x9E3779B97F4A7C15) & _MASK
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        yield (z ^ (z >> 31)) & _MASK
