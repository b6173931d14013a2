"""Build script for the optional compiled kernels.

Package metadata lives in pyproject.toml; this file only wires up the
Cython extension. If Cython is unavailable the package installs without
the extension and the pure-Python kernels are used at runtime.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [Extension("delsarte._speedups", ["src/delsarte/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
