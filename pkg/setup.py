"""Build script: compiles the optional search-kernel extension.

The package works without the extension (pure-Python kernels take over at
import time), so a missing Cython or C toolchain only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("pathpower._speedups", ["src/pathpower/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
