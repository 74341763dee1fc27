import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "wavecoeff.kernels._compiled",
                ["src/wavecoeff/kernels/_compiled.pyx"],
                include_dirs=[np.get_include()],
                # -ffp-contract=off: keep the compiled arithmetic bit-compatible
                # with the pure NumPy reference kernels (no FMA fusion).
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
