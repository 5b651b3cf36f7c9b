"""Build script.  The compiled search kernels are optional: if Cython or a C
compiler is unavailable the build falls through and the package uses the
pure-Python fallback selected at import time."""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/monopair/_kernels/_speedups.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    sys.stderr.write(
        "monopair: skipping compiled kernels (%s); "
        "the pure-Python fallback will be used\n" % exc
    )

setup(ext_modules=ext_modules)
