"""Synthetic observation data: forward solve plus seeded uniform noise.

Noise protocol: noisy = clean + delta * xi with xi i.i.d. uniform on [-1, 1]
and delta = delta0 * max|clean| over the whole mesh (discrete stand-in for
the sup norm). Draws happen only at nodes with nonzero window weight, in
time-major node-ascending order; that order is normative, so a given seed
always produces the same noisy field. The generator is numpy's Philox
(64-bit seeded, counter-based, platform-independent stream).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import AdmissibilityError
from .mesh import SpaceTimeField, SpatialField
from .wave import WaveProblem, solve_forward
from .window import ObservationWindow

__all__ = ["NoisySample", "make_observation"]


@dataclass(frozen=True)
class NoisySample:
    clean: SpaceTimeField
    noisy: SpaceTimeField
    delta: float
    delta0: float
    seed: int


def make_observation(
    p_true: SpatialField,
    source: SpaceTimeField,
    initial_value: SpatialField,
    window: ObservationWindow,
    delta0: float,
    seed: int,
) -> NoisySample:
    if not 0.0 <= delta0 < 1.0:
        raise AdmissibilityError(f"relative noise level must be in [0, 1), got {delta0}")
    clean = solve_forward(WaveProblem(p_true, source, initial_value))
    if delta0 == 0.0:
        return NoisySample(clean, clean, 0.0, 0.0, seed)

    delta = delta0 * float(np.max(np.abs(clean.values)))
    chi = window.indicator_weights(clean.grid)
    observed = np.broadcast_to(chi > 0.0, clean.values.shape)
    # C-order ravel of (levels, nodes) = time-major, node index ascending
    flat_idx = np.flatnonzero(observed.ravel())
    rng = np.random.Generator(np.random.Philox(seed))
    xi = rng.uniform(-1.0, 1.0, size=flat_idx.size)

    noisy = clean.values.copy()
    noisy.ravel()[flat_idx] += delta * xi
    return NoisySample(clean, SpaceTimeField(clean.grid, clean.tgrid, noisy), delta, delta0, seed)
