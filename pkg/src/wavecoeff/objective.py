"""Tikhonov functional, its gradient field, and the surrogate functional.

The functional minimized by the reconstruction is

    J(p) = ||u(p) - data||^2_{L2(omega x (0,T))} + alpha ||p'||^2_{L2(Omega)},

whose Gateaux derivative along an interior direction pt (pt = 0 on the
boundary) has the adjoint form

    J'(p) pt = -2 * integral_Omega (g + alpha p'') pt dx,
    g(x) = integral_0^T u_x(p) z_x(p) dt,

with z the backward solution driven by the windowed residual. The surrogate

    Js(p, q) = J(p) + K ||(p - q)'||^2 - ||u(p) - u(q)||^2_{omega x (0,T)}

is nonnegative whenever K dominates the pairwise ratio
||u(p)-u(q)||^2 / ||(p-q)'||^2; ``estimate_surrogate_bound`` samples that
ratio over random admissible pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .exceptions import AdmissibilityError, DimensionMismatchError
from .mesh import (
    Grid1D,
    SpaceTimeField,
    SpatialField,
    TimeGrid,
    _grad_values_batch,
    grad_spatial,
    l2_norm_spacetime,
    l2_norm_spatial,
    laplacian_spatial,
)
from .wave import WaveProblem, solve_backward, solve_forward
from .window import ObservationWindow

__all__ = [
    "ObjectiveConfig",
    "ObjectiveValue",
    "evaluate_J",
    "gradient_field",
    "directional_derivative",
    "evaluate_surrogate",
    "estimate_surrogate_bound",
]


@dataclass(frozen=True)
class ObjectiveConfig:
    window: ObservationWindow
    alpha: float

    def __post_init__(self):
        if self.alpha < 0.0:
            raise AdmissibilityError(f"alpha must be >= 0, got {self.alpha}")


class ObjectiveValue(NamedTuple):
    total: float
    misfit: float  # squared windowed data misfit
    penalty: float  # alpha * ||p'||^2


def evaluate_J(
    p: SpatialField, u_of_p: SpaceTimeField, data: SpaceTimeField, cfg: ObjectiveConfig
) -> ObjectiveValue:
    if u_of_p.grid != data.grid or u_of_p.tgrid != data.tgrid or p.grid != data.grid:
        raise DimensionMismatchError("objective fields live on different meshes")
    diff = SpaceTimeField(data.grid, data.tgrid, u_of_p.values - data.values)
    misfit = l2_norm_spacetime(diff, cfg.window) ** 2
    penalty = cfg.alpha * l2_norm_spatial(grad_spatial(p)) ** 2
    return ObjectiveValue(misfit + penalty, misfit, penalty)


def gradient_field(u: SpaceTimeField, z: SpaceTimeField) -> SpatialField:
    """g(x) = integral_0^T u_x z_x dt (trapezoid in time, nodal gradients)."""
    if u.grid != z.grid or u.tgrid != z.tgrid:
        raise DimensionMismatchError("gradient fields live on different meshes")
    h = u.grid.h
    ux = _grad_values_batch(u.values, h)
    zx = _grad_values_batch(z.values, h)
    wt = u.tgrid.quad_weights
    return SpatialField(u.grid, wt @ (ux * zx))


def _interior_integral(grid: Grid1D, values: np.ndarray) -> float:
    """Trapezoid integral of a field known to vanish at both ends."""
    return float(grid.h * np.sum(values[1:-1]))


def directional_derivative(
    p: SpatialField,
    direction: SpatialField,
    data: SpaceTimeField,
    source: SpaceTimeField,
    initial_value: SpatialField,
    cfg: ObjectiveConfig,
) -> float:
    """J'(p) applied to ``direction`` via the adjoint form (see module docstring)."""
    scale = max(1.0, float(np.max(np.abs(direction.values))))
    if abs(direction.values[0]) > 1e-12 * scale or abs(direction.values[-1]) > 1e-12 * scale:
        raise AdmissibilityError("direction must vanish at both boundary nodes")
    u = solve_forward(WaveProblem(p, source, initial_value))
    residual = SpaceTimeField(data.grid, data.tgrid, u.values - data.values)
    z = solve_backward(p, residual, cfg.window)
    g = gradient_field(u, z)
    lap = laplacian_spatial(p)
    integrand = (g.values + cfg.alpha * lap.values) * direction.values
    return -2.0 * _interior_integral(p.grid, integrand)


def evaluate_surrogate(
    p: SpatialField,
    q: SpatialField,
    u_p: SpaceTimeField,
    u_q: SpaceTimeField,
    data: SpaceTimeField,
    K: float,
    cfg: ObjectiveConfig,
) -> float:
    """Js(p, q); equals J(p) exactly when q = p."""
    if K <= 0.0:
        raise AdmissibilityError(f"K must be positive, got {K}")
    j_p = evaluate_J(p, u_p, data, cfg).total
    step = SpatialField(p.grid, p.values - q.values)
    coupling = K * l2_norm_spatial(grad_spatial(step)) ** 2
    sol_diff = SpaceTimeField(u_p.grid, u_p.tgrid, u_p.values - u_q.values)
    contrast = l2_norm_spacetime(sol_diff, cfg.window) ** 2
    return j_p + coupling - contrast


def sample_admissible_field(grid: Grid1D, rng, boundary_value: float = 1.0) -> SpatialField:
    """Random admissible coefficient: boundary pinned, comfortably positive."""
    x = grid.nodes
    vals = np.full(grid.n_nodes, boundary_value)
    for k in range(1, 5):
        vals = vals + rng.uniform(-0.3, 0.3) / k * np.sin(k * np.pi * x)
    return SpatialField(grid, vals)


def estimate_surrogate_bound(
    grid: Grid1D,
    tgrid: TimeGrid,
    source: SpaceTimeField,
    initial_value: SpatialField,
    window: ObservationWindow,
    n_pairs: int = 20,
    seed: int = 0,
) -> tuple[float, list[float]]:
    """Empirical K: max over sampled admissible pairs of
    ||u(p)-u(q)||^2_{omega x (0,T)} / ||(p-q)'||^2. Returns (max, per-pair ratios)."""
    rng = np.random.Generator(np.random.Philox(seed))
    ratios: list[float] = []
    for _ in range(n_pairs):
        p = sample_admissible_field(grid, rng)
        q = sample_admissible_field(grid, rng)
        u_p = solve_forward(WaveProblem(p, source, initial_value))
        u_q = solve_forward(WaveProblem(q, source, initial_value))
        diff = SpaceTimeField(grid, tgrid, u_p.values - u_q.values)
        num = l2_norm_spacetime(diff, window) ** 2
        den = l2_norm_spatial(grad_spatial(SpatialField(grid, p.values - q.values))) ** 2
        ratios.append(num / den)
    return max(ratios), ratios
