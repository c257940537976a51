# Builds the optional Cython kernel for reversible word simulation.
# If Cython is unavailable the package still installs; the simulator then
# falls back to the numpy implementation selected at import time.
from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/hwbcirc/sim/_core.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
