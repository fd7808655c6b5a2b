"""Deterministic random-number streams for parallel Monte Carlo.

All randomness in the workbench flows through counter-based Philox
generators keyed by ``(seed, stream ids...)``.  A stream is fully
determined by its ids, never by scheduling order, so sessions run on
worker pools reproduce bit-identically.  Gaussian variates use numpy's
ziggurat sampler; bit-exactness is promised per numpy build, statistical
equivalence always.
"""

from __future__ import annotations

import numpy as np

__all__ = ["stream", "spawn", "bits"]


def stream(seed: int, *ids: int) -> np.random.Generator:
    """Return the Philox generator for stream ``(seed, *ids)``.

    The same (seed, ids) tuple always yields the same stream; distinct
    tuples yield statistically independent streams.
    """
    ss = np.random.SeedSequence(entropy=seed, spawn_key=tuple(int(i) for i in ids))
    return np.random.Generator(np.random.Philox(ss))


def spawn(seed: int, n: int, *ids: int) -> list[np.random.Generator]:
    """Return ``n`` independent generators for parallel workers."""
    return [stream(seed, *ids, i) for i in range(n)]


def bits(rng: np.random.Generator, shape) -> np.ndarray:
    """Uniform information bits in {0,1} as float64."""
    return rng.integers(0, 2, size=shape).astype(np.float64)
