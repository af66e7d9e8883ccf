import os

from setuptools import setup

ext_modules = []
if not os.environ.get("QFISH_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/qfish/_speedups.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython available: install pure-Python only, kernels fall back.
        ext_modules = []

setup(ext_modules=ext_modules)
