"""Build script: compiles the optional C extension for the hot kernels.

Set LAT2D_PURE_PYTHON=1 to skip the extension entirely; the package then
runs on the pure-Python kernel implementations.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("LAT2D_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("lat2d._ckernels", ["src/lat2d/_ckernels.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
