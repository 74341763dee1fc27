"""Weight-function geometry diagnostics.

The stability theory rests on the weight psi(x, t) = d(x) - beta t^2 with
0 < beta < 1, its exponential phi = exp(lambda psi), and the level sets
Omega(delta) = {x : d(x) > delta}. These diagnostics report whether a given
observation setup satisfies the geometric conditions (time horizon
T^2 > max d, window covering the boundary, level-set containment) and which
beta are feasible. Nothing here feeds the reconstruction loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt
from typing import Union

import numpy as np

from .exceptions import AdmissibilityError
from .mesh import Grid1D, SpatialField, TimeGrid, grad_spatial
from .window import ObservationWindow

__all__ = [
    "QuadraticWeight",
    "SampledWeight",
    "CarlemanWeights",
    "psi",
    "phi",
    "level_set_omega",
    "level_set_q",
    "check_observation_geometry",
    "GeometryReport",
]

Interval = tuple[float, float]


@dataclass(frozen=True)
class QuadraticWeight:
    """Canonical weight d(x) = (x - x0)^2 with x0 outside the closed domain."""

    x0: float = -0.1

    def __call__(self, x):
        return (np.asarray(x, dtype=float) - self.x0) ** 2

    def range_on(self, lo: float, hi: float) -> tuple[float, float]:
        ends = [float(self((lo,))[0]), float(self((hi,))[0])]
        if lo < self.x0 < hi:
            ends.append(0.0)
        return min(ends), max(ends)

    def superlevel_set(self, delta: float, lo: float, hi: float) -> tuple[Interval, ...]:
        """{x in (lo, hi) : d(x) > delta} as maximal open intervals (closed form)."""
        if delta <= 0.0:
            # d > delta everywhere except possibly at x0
            if delta < 0.0 or not lo < self.x0 < hi:
                return ((lo, hi),)
            return ((lo, self.x0), (self.x0, hi))
        r = sqrt(delta)
        pieces = []
        if self.x0 - r > lo:
            pieces.append((lo, self.x0 - r))
        if self.x0 + r < hi:
            pieces.append((self.x0 + r, hi))
        return tuple(pieces)


@dataclass(frozen=True)
class SampledWeight:
    """d given by nodal samples; level sets located by linear bracketing."""

    samples: SpatialField

    def __call__(self, x):
        return np.interp(np.asarray(x, dtype=float), self.samples.grid.nodes, self.samples.values)

    def range_on(self, lo: float, hi: float) -> tuple[float, float]:
        v = self.samples.values
        return float(np.min(v)), float(np.max(v))

    def superlevel_set(self, delta: float, lo: float, hi: float) -> tuple[Interval, ...]:
        x = self.samples.grid.nodes
        above = self.samples.values > delta
        pieces: list[Interval] = []
        start = None
        for i, flag in enumerate(above):
            if flag and start is None:
                if i == 0:
                    start = lo
                else:  # bracket the crossing in the preceding cell
                    f0, f1 = self.samples.values[i - 1], self.samples.values[i]
                    start = float(x[i - 1] + (delta - f0) / (f1 - f0) * (x[i] - x[i - 1]))
            elif not flag and start is not None:
                f0, f1 = self.samples.values[i - 1], self.samples.values[i]
                end = float(x[i - 1] + (delta - f0) / (f1 - f0) * (x[i] - x[i - 1]))
                pieces.append((start, end))
                start = None
        if start is not None:
            pieces.append((start, hi))
        return tuple(pieces)


WeightDescriptor = Union[QuadraticWeight, SampledWeight]


@dataclass(frozen=True)
class CarlemanWeights:
    d: WeightDescriptor
    beta: float = 0.5
    lam: float = 1.0
    delta: float = 0.0

    def __post_init__(self):
        if not 0.0 < self.beta < 1.0:
            raise AdmissibilityError(f"beta must lie in (0, 1), got {self.beta}")
        if self.lam <= 0.0:
            raise AdmissibilityError(f"lambda must be positive, got {self.lam}")
        if self.delta < 0.0:
            raise AdmissibilityError(f"level delta must be >= 0, got {self.delta}")


def psi(w: CarlemanWeights, x, t):
    """psi(x, t) = d(x) - beta t^2 (vectorized, even in t)."""
    return w.d(x) - w.beta * np.asarray(t, dtype=float) ** 2


def phi(w: CarlemanWeights, x, t):
    """phi = exp(lambda psi)."""
    return np.exp(w.lam * psi(w, x, t))


def level_set_omega(
    w: CarlemanWeights, x_min: float = 0.0, x_max: float = 1.0
) -> tuple[Interval, ...]:
    """Omega(delta) = {x : d(x) > delta} as maximal open subintervals."""
    return w.d.superlevel_set(w.delta, x_min, x_max)


def level_set_q(
    w: CarlemanWeights, tgrid: TimeGrid, x_min: float = 0.0, x_max: float = 1.0
) -> list[tuple[Interval, ...]]:
    """Q(delta) sections per time level: {x : psi(x, t_k) > delta}."""
    out = []
    for t in tgrid.levels:
        shifted = w.delta + w.beta * float(t) ** 2
        out.append(w.d.superlevel_set(shifted, x_min, x_max))
    return out


@dataclass(frozen=True)
class GeometryReport:
    time_condition_holds: bool
    max_d: float
    minimal_time: float
    boundary_coverage_holds: bool
    containment_holds: bool
    beta_interval: Interval | None
    omega_level_set: tuple[Interval, ...]
    min_nonvanishing: float | None = None

    def rows(self) -> list[tuple[str, str, str]]:
        """(condition, holds, detail) rows for CSV/plain-text rendering."""

        def fmt_ivs(ivs):
            return " u ".join(f"({a:.10g}, {b:.10g})" for a, b in ivs) or "empty"

        rows = [
            (
                "time_condition",
                str(self.time_condition_holds).lower(),
                f"T^2 > max d = {self.max_d:.10g}; minimal T = {self.minimal_time:.10g}",
            ),
            (
                "boundary_coverage",
                str(self.boundary_coverage_holds).lower(),
                "both domain endpoints are endpoints of the window",
            ),
            (
                "level_set_containment",
                str(self.containment_holds).lower(),
                "closure of Omega(delta) lies in the closed domain",
            ),
            (
                "beta_interval",
                "info",
                "empty"
                if self.beta_interval is None
                else f"({self.beta_interval[0]:.10g}, {self.beta_interval[1]:.10g})",
            ),
            ("omega_level_set", "info", fmt_ivs(self.omega_level_set)),
        ]
        if self.min_nonvanishing is not None:
            rows.append(
                ("nonvanishing_min", "info", f"min |u0' d'| = {self.min_nonvanishing:.10g}")
            )
        return rows


def check_observation_geometry(
    w: CarlemanWeights,
    window: ObservationWindow,
    T: float,
    x_min: float = 0.0,
    x_max: float = 1.0,
    initial_value: SpatialField | None = None,
) -> GeometryReport:
    """Check the observation-geometry conditions; purely diagnostic."""
    d_min, d_max = w.d.range_on(x_min, x_max)
    if d_min <= 0.0:
        raise AdmissibilityError("weight d must be strictly positive on the closed domain")
    minimal_time = sqrt(d_max)
    time_ok = T * T > d_max
    beta_iv = None
    if time_ok:
        lo = d_max / (T * T)
        if lo < 1.0:
            beta_iv = (lo, 1.0)

    omega_delta = level_set_omega(w, x_min, x_max)
    # In 1D with the whole boundary observed, closure containment reduces to
    # the intervals lying inside the closed domain, true by construction.
    containment = all(x_min <= a < b <= x_max for a, b in omega_delta)

    nonvanish = None
    if initial_value is not None:
        du0 = grad_spatial(initial_value).values
        dd = grad_spatial(
            SpatialField(initial_value.grid, w.d(initial_value.grid.nodes))
        ).values
        nonvanish = float(np.min(np.abs(du0 * dd)))

    return GeometryReport(
        time_condition_holds=time_ok,
        max_d=d_max,
        minimal_time=minimal_time,
        boundary_coverage_holds=window.covers_boundary(x_min, x_max),
        containment_holds=containment,
        beta_interval=beta_iv,
        omega_level_set=omega_delta,
        min_nonvanishing=nonvanish,
    )
