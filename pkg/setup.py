"""Build script: compiles the optional integer-geometry speedup extension.

The package is fully functional without the extension (a pure-Python twin of
every kernel is selected at import time), so a failed compile only costs
speed.  `pip install -e . --no-build-isolation` builds it when Cython and a C
compiler are present.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("OKBODIES_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "okbodies._speedups",
                    ["src/okbodies/_speedups.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
