"""Reconstruction of the spatial principal coefficient p(x) of a 1D wave
equation from noisy partial interior observations, plus weight-function
geometry diagnostics and an experiment-runner CLI."""

from .carleman import (
    CarlemanWeights,
    QuadraticWeight,
    SampledWeight,
    check_observation_geometry,
    level_set_omega,
    level_set_q,
    phi,
    psi,
)
from .elliptic import PoissonProblem, solve_poisson
from .kernels import BACKEND as KERNEL_BACKEND
from .mesh import (
    Grid1D,
    SpaceTimeField,
    SpatialField,
    TimeGrid,
    grad_spatial,
    l2_norm_spacetime,
    l2_norm_spatial,
    laplacian_spatial,
)
from .objective import (
    ObjectiveConfig,
    ObjectiveValue,
    directional_derivative,
    estimate_surrogate_bound,
    evaluate_J,
    evaluate_surrogate,
    gradient_field,
)
from .reconstruct import (
    CoefficientSpec,
    IterationConfig,
    ReconstructionResult,
    iterate_once,
    run,
    suggest_parameters,
)
from .synth import NoisySample, make_observation
from .wave import WaveProblem, discrete_energy, solve_backward, solve_forward, solve_sensitivity
from .window import ObservationWindow

__version__ = "0.1.0"
