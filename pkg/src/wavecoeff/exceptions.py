"""Exception hierarchy shared across the package."""


class WavecoeffError(Exception):
    """Base class for all errors raised by this package."""


class InvalidFieldError(WavecoeffError):
    """A field carries non-finite values or the wrong number of samples."""


class DimensionMismatchError(WavecoeffError):
    """Fields or windows that must share a mesh do not."""


class GridTooCoarseError(WavecoeffError):
    """The grid has too few cells for the requested stencil."""


class DegenerateCoefficientError(WavecoeffError):
    """The wave coefficient is not strictly positive on the grid."""


class AdmissibilityError(WavecoeffError):
    """An update direction or coefficient violates the admissible set."""


class InvalidWindowError(WavecoeffError):
    """Observation window intervals are malformed (overlapping, outside the domain, ...)."""


class DegenerateIterateError(WavecoeffError):
    """The iteration produced a non-positive coefficient with clamping disabled."""

    def __init__(self, iteration: int, message: str):
        super().__init__(message)
        self.iteration = iteration


class ConfigError(WavecoeffError):
    """An experiment configuration could not be resolved."""
