"""Observation window omega: a union of open subintervals of the domain.

The nodal indicator discretizes the characteristic function chi_omega
consistently with trapezoid quadrature: weight 1 at nodes strictly inside an
interval, 1/2 at nodes coinciding with an interval endpoint, 0 elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .exceptions import InvalidWindowError
from .mesh import Grid1D

# Nodes are matched against interval endpoints to this absolute tolerance
# (node coordinates come from linspace, interval endpoints from config text).
_ENDPOINT_TOL = 1e-12


@dataclass(frozen=True)
class ObservationWindow:
    """omega = union of disjoint open intervals, e.g. (0, 0.1) u (0.9, 1)."""

    intervals: tuple[tuple[float, float], ...]

    def __post_init__(self):
        ivs = sorted((float(a), float(b)) for a, b in self.intervals)
        if not ivs:
            raise InvalidWindowError("window needs at least one interval")
        for a, b in ivs:
            if not b > a:
                raise InvalidWindowError(f"empty or reversed interval ({a}, {b})")
        for (_, b0), (a1, _) in zip(ivs, ivs[1:]):
            if a1 < b0 - _ENDPOINT_TOL:
                raise InvalidWindowError(
                    f"overlapping intervals: one ends at {b0}, the next starts at {a1}"
                )
        object.__setattr__(self, "intervals", tuple(ivs))

    @classmethod
    def complement_of(cls, a: float, b: float, x_min: float = 0.0, x_max: float = 1.0):
        """omega = Omega \\ [a, b], the paper's two-sided window."""
        return cls(((x_min, a), (b, x_max)))

    @property
    def measure(self) -> float:
        return float(sum(b - a for a, b in self.intervals))

    def indicator_weights(self, grid: Grid1D) -> np.ndarray:
        """Per-node chi weights in {0, 1/2, 1} (see module docstring)."""
        lo, hi = grid.x_min, grid.x_max
        for a, b in self.intervals:
            if a < lo - _ENDPOINT_TOL or b > hi + _ENDPOINT_TOL:
                raise InvalidWindowError(
                    f"interval ({a}, {b}) outside the domain [{lo}, {hi}]"
                )
        x = grid.nodes
        chi = np.zeros(grid.n_nodes)
        for a, b in self.intervals:
            chi[(x > a + _ENDPOINT_TOL) & (x < b - _ENDPOINT_TOL)] = 1.0
            chi[np.abs(x - a) <= _ENDPOINT_TOL] = 0.5
            chi[np.abs(x - b) <= _ENDPOINT_TOL] = 0.5
        return chi

    def covers_boundary(self, x_min: float = 0.0, x_max: float = 1.0) -> bool:
        """True iff both domain endpoints are endpoints of some interval."""
        ends: list[float] = []
        for a, b in self.intervals:
            ends.extend((a, b))
        return any(abs(e - x_min) <= _ENDPOINT_TOL for e in ends) and any(
            abs(e - x_max) <= _ENDPOINT_TOL for e in ends
        )

    def spec_string(self) -> str:
        """Canonical text form, stable for CSV output."""
        return ";".join(f"({a:g},{b:g})" for a, b in self.intervals)
