"""Uniform 1D grid, space-time mesh, and the discrete calculus built on them.

Conventions used everywhere else in the package:

- the spatial grid has ``n_cells`` equal intervals and ``n_cells + 1`` nodes,
  computed by the affine formula (``numpy.linspace``), so both endpoints are
  exact and there is no accumulation drift;
- all L2 quantities use the composite trapezoid rule, which is exact for
  fields affine in the integration variable and second-order otherwise;
- space-time samples are stored as ``values[time_level, node]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable

import numpy as np

from .exceptions import (
    DimensionMismatchError,
    GridTooCoarseError,
    InvalidFieldError,
)

__all__ = [
    "Grid1D",
    "TimeGrid",
    "SpatialField",
    "SpaceTimeField",
    "l2_norm_spatial",
    "l2_norm_spacetime",
    "grad_spatial",
    "laplacian_spatial",
]


@dataclass(frozen=True)
class Grid1D:
    """Uniform node-centered grid on [x_min, x_max] with n_cells equal intervals."""

    x_min: float = 0.0
    x_max: float = 1.0
    n_cells: int = 100

    def __post_init__(self):
        if self.n_cells < 2:
            raise GridTooCoarseError(f"need n_cells >= 2, got {self.n_cells}")
        if not self.x_max > self.x_min:
            raise InvalidFieldError(f"empty domain [{self.x_min}, {self.x_max}]")

    @property
    def n_nodes(self) -> int:
        return self.n_cells + 1

    @property
    def h(self) -> float:
        return (self.x_max - self.x_min) / self.n_cells

    @cached_property
    def nodes(self) -> np.ndarray:
        x = np.linspace(self.x_min, self.x_max, self.n_nodes)
        x.flags.writeable = False
        return x

    @cached_property
    def quad_weights(self) -> np.ndarray:
        """Composite-trapezoid weights (h at interior nodes, h/2 at the ends)."""
        w = np.full(self.n_nodes, self.h)
        w[0] = w[-1] = 0.5 * self.h
        w.flags.writeable = False
        return w


@dataclass(frozen=True)
class TimeGrid:
    """Uniform time levels 0 = t_0 < ... < t_{n_steps} = t_max."""

    t_max: float = 1.0
    n_steps: int = 100

    def __post_init__(self):
        if self.n_steps < 2:
            raise GridTooCoarseError(f"need n_steps >= 2, got {self.n_steps}")
        if not self.t_max > 0.0:
            raise InvalidFieldError(f"need t_max > 0, got {self.t_max}")

    @property
    def n_levels(self) -> int:
        return self.n_steps + 1

    @property
    def tau(self) -> float:
        return self.t_max / self.n_steps

    @cached_property
    def levels(self) -> np.ndarray:
        t = np.linspace(0.0, self.t_max, self.n_levels)
        t.flags.writeable = False
        return t

    @cached_property
    def quad_weights(self) -> np.ndarray:
        w = np.full(self.n_levels, self.tau)
        w[0] = w[-1] = 0.5 * self.tau
        w.flags.writeable = False
        return w


def _as_locked_array(values, shape, what: str) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.shape != shape:
        raise InvalidFieldError(f"{what}: expected shape {shape}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidFieldError(f"{what}: non-finite values")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class SpatialField:
    """Nodal samples of a function on a :class:`Grid1D`."""

    grid: Grid1D
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self,
            "values",
            _as_locked_array(self.values, (self.grid.n_nodes,), "SpatialField"),
        )

    @classmethod
    def from_callable(cls, grid: Grid1D, fn: Callable) -> "SpatialField":
        return cls(grid, np.asarray(fn(grid.nodes), dtype=float))

    @classmethod
    def constant(cls, grid: Grid1D, value: float) -> "SpatialField":
        return cls(grid, np.full(grid.n_nodes, float(value)))


@dataclass(frozen=True)
class SpaceTimeField:
    """Nodal samples on the space-time mesh, indexed ``values[time_level, node]``."""

    grid: Grid1D
    tgrid: TimeGrid
    values: np.ndarray

    def __post_init__(self):
        shape = (self.tgrid.n_levels, self.grid.n_nodes)
        object.__setattr__(
            self, "values", _as_locked_array(self.values, shape, "SpaceTimeField")
        )

    @classmethod
    def from_callable(cls, grid: Grid1D, tgrid: TimeGrid, fn: Callable) -> "SpaceTimeField":
        x = grid.nodes[None, :]
        t = tgrid.levels[:, None]
        return cls(grid, tgrid, np.broadcast_to(fn(x, t), (tgrid.n_levels, grid.n_nodes)).copy())

    @classmethod
    def zeros(cls, grid: Grid1D, tgrid: TimeGrid) -> "SpaceTimeField":
        return cls(grid, tgrid, np.zeros((tgrid.n_levels, grid.n_nodes)))


def _check_same_grid(a, b):
    if a.grid != b.grid:
        raise DimensionMismatchError("fields live on different spatial grids")
    if hasattr(a, "tgrid") and hasattr(b, "tgrid") and a.tgrid != b.tgrid:
        raise DimensionMismatchError("fields live on different time grids")


def l2_norm_spatial(f: SpatialField) -> float:
    """Discrete L2(Omega) norm by the composite trapezoid rule."""
    return float(np.sqrt(np.sum(f.grid.quad_weights * f.values**2)))


def l2_inner_spatial(f: SpatialField, g: SpatialField) -> float:
    _check_same_grid(f, g)
    return float(np.sum(f.grid.quad_weights * f.values * g.values))


def l2_norm_spacetime(f: SpaceTimeField, window=None) -> float:
    """Discrete L2 norm over omega x (0, T), trapezoid in space and time.

    ``window`` restricts the spatial integration by the nodal indicator
    weights of the observation window; ``None`` integrates over all of Omega.
    """
    wx = f.grid.quad_weights
    if window is not None:
        wx = wx * window.indicator_weights(f.grid)
    wt = f.tgrid.quad_weights
    return float(np.sqrt(wt @ (f.values**2) @ wx))


def grad_spatial(f: SpatialField) -> SpatialField:
    """Discrete d/dx: centered interior stencil, second-order one-sided ends."""
    if f.grid.n_cells < 2:
        raise GridTooCoarseError("gradient needs at least 3 nodes")
    return SpatialField(f.grid, _grad_values(f.values, f.grid.h))


def _grad_values(v: np.ndarray, h: float) -> np.ndarray:
    out = np.empty_like(v)
    out[1:-1] = (v[2:] - v[:-2]) / (2.0 * h)
    out[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h)
    out[-1] = (3.0 * v[-1] - 4.0 * v[-2] + v[-3]) / (2.0 * h)
    return out


def _grad_values_batch(v: np.ndarray, h: float) -> np.ndarray:
    """Row-wise version of :func:`_grad_values` for (levels x nodes) arrays."""
    out = np.empty_like(v)
    out[:, 1:-1] = (v[:, 2:] - v[:, :-2]) / (2.0 * h)
    out[:, 0] = (-3.0 * v[:, 0] + 4.0 * v[:, 1] - v[:, 2]) / (2.0 * h)
    out[:, -1] = (3.0 * v[:, -1] - 4.0 * v[:, -2] + v[:, -3]) / (2.0 * h)
    return out


def laplacian_spatial(f: SpatialField) -> SpatialField:
    """Three-point discrete Laplacian at interior nodes.

    The two boundary entries carry no information (the iteration only needs
    the Laplacian in the open domain) and are filled with 0.0.
    """
    if f.grid.n_cells < 2:
        raise GridTooCoarseError("laplacian needs at least 3 nodes")
    v = f.values
    h2 = f.grid.h * f.grid.h
    out = np.zeros_like(v)
    out[1:-1] = (v[2:] - 2.0 * v[1:-1] + v[:-2]) / h2
    return SpatialField(f.grid, out)
