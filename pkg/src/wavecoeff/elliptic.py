"""Direct solver for the 1D Dirichlet problem  p'' = rhs  (sign as written).

The three-point stencil is exact on quadratics; the tridiagonal system is
solved by Thomas elimination in O(n).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .mesh import SpatialField

__all__ = ["PoissonProblem", "solve_poisson"]


@dataclass(frozen=True)
class PoissonProblem:
    """rhs is read at interior nodes only; boundary values are pinned."""

    rhs: SpatialField
    boundary_left: float
    boundary_right: float


def solve_poisson(problem: PoissonProblem) -> SpatialField:
    grid = problem.rhs.grid
    n1 = grid.n_nodes
    h2 = grid.h * grid.h

    m = n1 - 2  # interior unknowns
    lower = np.ones(m)
    diag = np.full(m, -2.0)
    upper = np.ones(m)
    rhs = h2 * problem.rhs.values[1:-1]
    rhs[0] -= problem.boundary_left
    rhs[-1] -= problem.boundary_right

    cp, den = kernels.thomas_factor(lower, diag, upper)
    interior = kernels.thomas_solve(lower, cp, den, rhs)

    out = np.empty(n1)
    out[0] = problem.boundary_left
    out[-1] = problem.boundary_right
    out[1:-1] = interior
    return SpatialField(grid, out)
