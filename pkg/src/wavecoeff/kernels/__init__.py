"""Hot numerical kernels with a compiled core and a pure-Python fallback.

The compiled extension (``wavecoeff.kernels._compiled``, Cython) and the
reference implementation (``wavecoeff.kernels._reference``, NumPy + Python
loops) execute the same IEEE-754 operation sequence; the extension is built
with ``-ffp-contract=off`` so results agree to the last bit in practice.

Selection happens once at import time. Set ``WAVECOEFF_KERNELS`` to
``compiled``/``cython`` or ``python``/``reference`` to force a backend;
default (``auto``) prefers the compiled core and silently falls back.
"""

import os

_choice = os.environ.get("WAVECOEFF_KERNELS", "auto").strip().lower() or "auto"

if _choice in ("auto", "compiled", "cython"):
    try:
        from . import _compiled as _impl

        BACKEND = "compiled"
    except ImportError:
        if _choice != "auto":
            raise ImportError(
                "WAVECOEFF_KERNELS requested the compiled kernels, "
                "but wavecoeff.kernels._compiled is not built"
            )
        from . import _reference as _impl

        BACKEND = "reference"
elif _choice in ("python", "reference"):
    from . import _reference as _impl

    BACKEND = "reference"
else:
    raise ValueError(f"unrecognized WAVECOEFF_KERNELS={_choice!r}")

flux_coefficients = _impl.flux_coefficients
apply_flux = _impl.apply_flux
apply_flux_batch = _impl.apply_flux_batch
thomas_factor = _impl.thomas_factor
thomas_solve = _impl.thomas_solve
newmark_march = _impl.newmark_march


def available_backends() -> dict:
    """Importable kernel modules by name (for tests and the benchmark)."""
    from . import _reference

    out = {"reference": _reference}
    try:
        from . import _compiled

        out["compiled"] = _compiled
    except ImportError:
        pass
    return out
